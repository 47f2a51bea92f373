#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cvx/apps/fidelity.hpp"
#include "cvx/apps/friction.hpp"
#include "cvx/descriptor.hpp"
#include "cvx/errors.hpp"
#include "cvx/geometric.hpp"
#include "cvx/serialize.hpp"
#include "cvx/space.hpp"
#include "cvx/suite.hpp"
#include <CLI11.hpp>

namespace {

// Inline JSON when it looks like JSON, otherwise a file path.
std::string descriptor_text(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw cvx::ValidationError("cannot read descriptor file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cvx::SpaceHandle space_from_arg(const std::string& arg) {
  return cvx::parse_space_descriptor(descriptor_text(arg));
}

int run_named_suite(const std::string& suite, const std::string& space_arg,
                    std::uint64_t seed, std::size_t cases) {
  cvx::SpaceHandle space;
  if (!space_arg.empty()) space = space_from_arg(space_arg);
  const auto result = cvx::run_suite(suite, space, seed, cases);
  std::cout << result.text();
  return result.exit_status();
}

std::vector<cvx::Rat> parse_rat_list(const std::string& text) {
  std::vector<cvx::Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(cvx::Rat::parse(item));
  if (out.empty()) throw cvx::ValidationError("empty rational list");
  return out;
}

int cmd_eval(const std::string& space_arg, const std::string& points_text,
             const std::string& weights_text) {
  const auto space = space_from_arg(space_arg);
  const auto points_json = cvx::json_parse(points_text);
  const auto weights_json = cvx::json_parse(weights_text);
  if (!points_json.is_array() || !weights_json.is_array()) {
    throw cvx::ValidationError("points and weights must be JSON arrays");
  }
  std::vector<cvx::Value> points;
  for (const auto& p : points_json) points.push_back(cvx::value_from_json(p));
  std::vector<cvx::Coeff> weights;
  for (const auto& w : weights_json) weights.push_back(cvx::coeff_from_json(w));
  const auto result = cvx::cc_nary(space, weights, points);
  std::cout << cvx::value_to_json(result).dump() << "\n";
  return 0;
}

int cmd_friction(std::size_t cells) {
  const auto sol = cvx::apps::friction_solve(cells);
  std::printf("max_force=%.12f\nswitch_point=%.12f\n", sol.max_force,
              sol.switch_point);
  return 0;
}

int cmd_fidelity(const std::string& psi1, const std::string& psi2,
                 std::size_t grid) {
  const auto pair = cvx::apps::QubitPair::make(cvx::apps::parse_state(psi1),
                                               cvx::apps::parse_state(psi2));
  const double direct = cvx::apps::fidelity_defect(pair);
  const double searched = cvx::apps::fidelity_defect_search(pair, grid);
  const double gap = std::abs(direct - searched);
  std::printf("direct=%.9f\nsearch=%.9f\ngap=%.9f\n", direct, searched, gap);
  return gap <= 1e-2 ? 0 : 1;
}

int cmd_schur_horn(const std::string& diag, const std::string& eig) {
  cvx::SpectrumSpec spec;
  spec.diagonal = parse_rat_list(diag);
  spec.eigenvalues = parse_rat_list(eig);
  const bool member = cvx::permutohedron_contains(spec);
  std::cout << (member ? "true" : "false") << "\n";
  return member ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convex-space toolkit"};
  app.require_subcommand(1);

  std::string space_arg;
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  std::string points_text;
  std::string weights_text;
  std::size_t cells = 10000;
  std::string psi1;
  std::string psi2;
  std::size_t grid = 100;
  std::string diag;
  std::string eig;
  bool coefficient_change = false;
  bool roundtrip = false;

  auto add_seeded = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Seed for the case generator")
        ->envname("CVX_SEED");
    cmd->add_option("--cases", cases, "Number of random cases");
  };

  auto* laws = app.add_subcommand("laws", "Defining-law suite for a space");
  laws->add_option("--space", space_arg, "Space descriptor (inline or file)")
      ->required();
  add_seeded(laws);

  auto* monad = app.add_subcommand(
      "monad", "Distribution-algebra laws, or the coefficient-change square");
  monad->add_option("--space", space_arg, "Space descriptor (inline or file)");
  monad->add_flag("--coefficient-change", coefficient_change,
                  "Check the distribution-to-subset change of coefficients");
  add_seeded(monad);

  auto* lawvere = app.add_subcommand(
      "lawvere", "Functoriality of the induced model, or the round-trips");
  lawvere->add_option("--space", space_arg, "Space descriptor (inline or file)")
      ->required();
  lawvere->add_flag("--roundtrip", roundtrip,
                    "Check the operation/model round-trips instead");
  add_seeded(lawvere);

  auto* eval =
      app.add_subcommand("eval", "Evaluate a formal convex combination");
  eval->add_option("--space", space_arg, "Space descriptor (inline or file)")
      ->required();
  eval->add_option("--points", points_text, "JSON array of elements")
      ->required();
  eval->add_option("--weights", weights_text, "JSON array of rationals")
      ->required();

  auto* friction =
      app.add_subcommand("friction", "Zero-torque maximal-force profile");
  friction->add_option("--cells", cells, "Grid cells (at least 10)")
      ->check(CLI::Range(static_cast<std::size_t>(10),
                         std::numeric_limits<std::size_t>::max()));

  auto* fidelity = app.add_subcommand(
      "fidelity", "Scalar-product recovery through affine functionals");
  fidelity->add_option("--psi1", psi1, "First state, e.g. 1+0i,0i")->required();
  fidelity->add_option("--psi2", psi2, "Second state")->required();
  fidelity->add_option("--grid", grid, "Sphere grid steps (at least 100)");

  auto* schur = app.add_subcommand(
      "schur-horn", "Diagonal-versus-spectrum membership test");
  schur->add_option("--diag", diag, "Candidate diagonal, e.g. 1/2,1/3,1/6")
      ->required();
  schur->add_option("--eig", eig, "Eigenvalues")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (laws->parsed()) return run_named_suite("laws", space_arg, seed, cases);
    if (monad->parsed()) {
      if (coefficient_change) {
        return run_named_suite("coefficient-change", "", seed, cases);
      }
      if (space_arg.empty()) {
        throw cvx::ValidationError("monad needs --space or a change flag");
      }
      return run_named_suite("algebra", space_arg, seed, cases);
    }
    if (lawvere->parsed()) {
      return run_named_suite(roundtrip ? "roundtrip" : "lawvere", space_arg,
                             seed, cases);
    }
    if (eval->parsed()) return cmd_eval(space_arg, points_text, weights_text);
    if (friction->parsed()) return cmd_friction(cells);
    if (fidelity->parsed()) return cmd_fidelity(psi1, psi2, grid);
    if (schur->parsed()) return cmd_schur_horn(diag, eig);
  } catch (const cvx::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cvx::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
