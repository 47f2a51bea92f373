#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "cvx/descriptor.hpp"
#include "cvx/laws.hpp"
#include "cvx/serialize.hpp"

using namespace cvx;

namespace {

struct CliResult {
  int status = -1;
  std::string output;
};

// Runs the built binary through the shell, merging stderr into stdout.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      "env " + (env.empty() ? std::string("-u CVX_SEED") : env) + " " +
      std::string(CVX_CLI_PATH) + " " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
    r.output.append(buf, got);
  }
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

const char* kVec2 = "'{\"kind\": \"vector\", \"dim\": 2}'";

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("law reports are deterministic and all-pass on honest spaces") {
  const std::string args =
      std::string("laws --space ") + kVec2 + " --seed 7 --cases 60";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
  const auto ls = lines_of(first.output);
  CHECK(ls.size() >= 7);
  for (const auto& l : ls) {
    CHECK(l.substr(0, 5) == "PASS ");
    CHECK(l.find("seed=7") != std::string::npos);
  }

  const CliResult other = run_cli(
      std::string("laws --space ") + kVec2 + " --seed 8 --cases 60");
  CHECK(other.output != first.output);
}

TEST_CASE("failure lines reproduce through the recheck hook") {
  const CliResult r = run_cli(
      "laws --space '{\"kind\": \"fixture\", \"name\": "
      "\"corrupt-commutativity\"}' --seed 3 --cases 40");
  CHECK(r.status == 1);
  CHECK(r.output.find("FAIL parametric-commutativity") != std::string::npos);

  const auto space =
      parse_space_descriptor("{\"kind\": \"fixture\", \"name\": "
                             "\"corrupt-commutativity\"}");
  bool rechecked = false;
  for (const auto& l : lines_of(r.output)) {
    if (l.substr(0, 5) != "FAIL ") continue;
    const auto law_end = l.find(' ', 5);
    const std::string law = l.substr(5, law_end - 5);
    const auto case_pos = l.find(" case=");
    REQUIRE(case_pos != std::string::npos);
    const std::string case_json = l.substr(case_pos + 6);
    CHECK(recheck_law_case(space, law, case_json));
    rechecked = true;
  }
  CHECK(rechecked);
}

TEST_CASE("the seed comes from the environment unless overridden") {
  const std::string tail =
      std::string("laws --space ") + kVec2 + " --cases 30";
  const CliResult from_env = run_cli(tail, "CVX_SEED=5");
  const CliResult from_flag = run_cli(tail + " --seed 5");
  const CliResult overridden = run_cli(tail + " --seed 9", "CVX_SEED=5");
  const CliResult plain9 = run_cli(tail + " --seed 9");
  CHECK(from_env.output == from_flag.output);
  CHECK(overridden.output == plain9.output);
  CHECK(from_env.output != plain9.output);
}

TEST_CASE("descriptors load from files as well as inline text") {
  const std::string path = "cli_descriptor_tmp.json";
  {
    std::ofstream out(path);
    out << "{\"kind\": \"simplex\", \"vertices\": 3}\n";
  }
  const CliResult r = run_cli("laws --space " + path + " --cases 40");
  std::remove(path.c_str());
  CHECK(r.status == 0);
  CHECK(r.output.find("PASS unit-law") != std::string::npos);

  const CliResult missing = run_cli("laws --space no_such_file.json");
  CHECK(missing.status == 2);
  CHECK(missing.output.find("cannot read descriptor file") !=
        std::string::npos);
}

TEST_CASE("eval prints the exact combination") {
  const CliResult r = run_cli(
      "eval --space '{\"kind\": \"vector\", \"dim\": 1}' "
      "--points '[{\"v\": [\"1\"]}, {\"v\": [\"3\"]}]' "
      "--weights '[\"1/2\", \"1/2\"]'");
  CHECK(r.status == 0);
  CHECK(r.output == value_to_json(Value::vec({Rat(2)})).dump() + "\n");

  const CliResult bad_weights = run_cli(
      "eval --space '{\"kind\": \"vector\", \"dim\": 1}' "
      "--points '[{\"v\": [\"1\"]}, {\"v\": [\"3\"]}]' "
      "--weights '[\"1/2\", \"1/3\"]'");
  CHECK(bad_weights.status == 2);
}

TEST_CASE("exit codes separate failures from usage errors") {
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("laws").status == 2);
  CHECK(run_cli("laws --space '{\"kind\": \"vector\"}'").status == 2);
  CHECK(run_cli("laws --space '{\"kind\": \"warped\", \"dim\": 2}'").status ==
        2);
  CHECK(run_cli("friction --cells 5").status == 2);
  CHECK(run_cli("monad --space " + std::string(kVec2) + " --cases 40").status ==
        0);
  CHECK(run_cli("monad --coefficient-change --cases 40").status == 0);
  CHECK(run_cli("monad").status == 2);
  CHECK(run_cli("lawvere --space " + std::string(kVec2) + " --cases 30").status ==
        0);
  CHECK(run_cli("lawvere --space " + std::string(kVec2) +
                " --roundtrip --cases 30")
            .status == 0);
  CHECK(run_cli("fidelity --psi1 1,0 --psi2 0,1").status == 0);
  CHECK(run_cli("fidelity --psi1 2,0 --psi2 0,1").status == 2);
  CHECK(run_cli("schur-horn --diag 1/2,1/2 --eig 1,0").status == 0);
  CHECK(run_cli("schur-horn --diag 9/10,1/5,-1/10 --eig 1,0,0").status == 1);
}

TEST_CASE("schur-horn answers match the library") {
  const CliResult yes = run_cli("schur-horn --diag 1/3,1/3,1/3 --eig 1,0,0");
  CHECK(yes.status == 0);
  CHECK(yes.output == "true\n");
  const CliResult no = run_cli("schur-horn --diag 2,0 --eig 1,1");
  CHECK(no.status == 1);
  CHECK(no.output == "false\n");
}

TEST_CASE("fidelity reports the direct value, the search, and the gap") {
  const CliResult r =
      run_cli("fidelity --psi1 1,0 --psi2 0.6,0.8 --grid 150");
  CHECK(r.status == 0);
  const auto ls = lines_of(r.output);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].substr(0, 7) == "direct=");
  CHECK(ls[1].substr(0, 7) == "search=");
  CHECK(ls[2].substr(0, 4) == "gap=");
  CHECK(std::stod(ls[0].substr(7)) == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(std::stod(ls[2].substr(4)) < 1e-2);
}
