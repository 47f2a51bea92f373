#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvx/space.hpp"

namespace cvx {

// Law names as they appear in reports and failure lines.
namespace law {
inline constexpr const char* unit = "unit-law";
inline constexpr const char* derived_unit = "derived-unit-law";
inline constexpr const char* idempotency = "idempotency";
inline constexpr const char* commutativity = "parametric-commutativity";
inline constexpr const char* associativity = "deformed-associativity";
inline constexpr const char* one_independence = "one-independence";
inline constexpr const char* bracketing = "nary-bracketing";
inline constexpr const char* convex_map = "convex-map";
}  // namespace law

struct LawFailure {
  std::string law;
  std::string case_json;  // the inputs, machine-readable and re-runnable
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  long checked = 0;
  std::map<std::string, long> per_law;
  std::vector<LawFailure> failures;

  bool pass() const { return failures.empty(); }
  void count(const std::string& law) {
    ++checked;
    ++per_law[law];
  }
  void merge(LawReport other);
};

// One test case. Laws read the fields they need and ignore the rest;
// bracketing uses weights/points instead of x, y, z.
struct LawCase {
  Value x, y, z;
  Coeff lambda;
  Coeff mu;
  std::vector<Coeff> weights;
  std::vector<Value> points;
};

// Evaluates one named law on one case. Empty result means the law holds
// there; otherwise the failure carries the offending sides rendered as
// text and the case serialized as JSON.
std::optional<LawFailure> eval_law_case(const SpaceHandle& space,
                                        const std::string& name,
                                        const LawCase& c);

// Exhaustive sweep: all ordered triples from samples crossed with all
// coefficient pairs from lambdas (the endpoints 0 and 1 are always
// included), every binary law on each, plus bracketing checks up to five
// points drawn from the same samples.
LawReport check_convex_space_laws(const SpaceHandle& space,
                                  std::span<const Value> samples,
                                  std::span<const Coeff> lambdas);

// Affinity of f against both structures on sampled pairs, including a
// range check of f into the codomain.
LawReport check_convex_map(const std::function<Value(const Value&)>& f,
                           const SpaceHandle& dom, const SpaceHandle& cod,
                           std::span<const Value> samples,
                           std::span<const Coeff> lambdas);

// Randomized suite: `cases` sampled tuples with forced coverage of the
// coefficient endpoints and of the two-ones corner, plus a bracketing
// subsample. Deterministic in seed.
LawReport run_law_suite(const SpaceHandle& space, std::uint64_t seed,
                        long cases);

// Re-runs one serialized failure case through the named law.
// Returns true when the violation reproduces.
bool recheck_law_case(const SpaceHandle& space, const std::string& name,
                      const std::string& case_json);

}  // namespace cvx
