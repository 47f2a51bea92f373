#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvx/laws.hpp"
#include "cvx/space.hpp"

namespace cvx {

// A named verification run: the report plus everything needed to
// reproduce it.
struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  LawReport report;

  bool passed() const { return report.pass(); }
  int exit_status() const { return passed() ? 0 : 1; }

  // One line per outcome, sorted. Clean laws render as
  //   PASS <law> seed=<seed> cases=<count>
  // and each failure as
  //   FAIL <law> seed=<seed> case=<json>
  // where the JSON object can be re-checked verbatim.
  std::vector<std::string> lines() const;
  std::string text() const;
};

// Known suite names: "laws", "algebra", "lawvere", "roundtrip",
// "coefficient-change". Unknown names raise ValidationError. The
// coefficient-change suite carries its own carrier and ignores `space`;
// every other suite requires one (DomainError when absent).
SuiteResult run_suite(const std::string& name, const SpaceHandle& space,
                      std::uint64_t seed, std::size_t cases);

std::vector<std::string> suite_names();

}  // namespace cvx
