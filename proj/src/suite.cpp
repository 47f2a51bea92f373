#include "cvx/suite.hpp"

#include <algorithm>
#include <sstream>

#include "cvx/dist_ops.hpp"
#include "cvx/errors.hpp"
#include "cvx/lawvere.hpp"
#include "cvx/semilattice.hpp"

namespace cvx {

std::vector<std::string> SuiteResult::lines() const {
  std::vector<std::string> out;
  std::vector<std::string> failed_laws;
  for (const auto& f : report.failures) {
    failed_laws.push_back(f.law);
    std::ostringstream line;
    line << "FAIL " << f.law << " seed=" << seed << " case=" << f.case_json;
    out.push_back(line.str());
  }
  for (const auto& [law_name, count] : report.per_law) {
    if (std::find(failed_laws.begin(), failed_laws.end(), law_name) !=
        failed_laws.end()) {
      continue;
    }
    std::ostringstream line;
    line << "PASS " << law_name << " seed=" << seed << " cases=" << count;
    out.push_back(line.str());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string SuiteResult::text() const {
  std::ostringstream os;
  for (const auto& line : lines()) os << line << "\n";
  return os.str();
}

std::vector<std::string> suite_names() {
  return {"laws", "algebra", "lawvere", "roundtrip", "coefficient-change"};
}

SuiteResult run_suite(const std::string& name, const SpaceHandle& space,
                      std::uint64_t seed, std::size_t cases) {
  SuiteResult result;
  result.suite = name;
  result.seed = seed;
  result.cases = cases;
  const auto known = suite_names();
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    throw ValidationError("unknown suite: " + name);
  }
  const long n = static_cast<long>(cases);
  if (name == "coefficient-change") {
    result.report = run_coefficient_change_suite(seed, n);
    return result;
  }
  if (!space) {
    throw DomainError("suite '" + name + "' requires a space");
  }
  if (name == "laws") {
    result.report = run_law_suite(space, seed, n);
  } else if (name == "algebra") {
    result.report = run_algebra_suite(space, seed, n);
  } else if (name == "lawvere") {
    result.report = check_lawvere_functoriality(space, 4, n, seed);
  } else {
    result.report = run_roundtrip_suite(space, seed, n);
  }
  return result;
}

}  // namespace cvx
