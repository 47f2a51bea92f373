#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "cvx/dist_ops.hpp"
#include "cvx/laws.hpp"
#include "cvx/space.hpp"

namespace cvx {

namespace law {
inline constexpr const char* giry_left_unit = "giry-left-unit";
inline constexpr const char* giry_right_unit = "giry-right-unit";
inline constexpr const char* giry_associativity = "giry-associativity";
inline constexpr const char* manes_left_unit = "manes-left-unit";
inline constexpr const char* manes_right_unit = "manes-right-unit";
inline constexpr const char* manes_associativity = "manes-associativity";
inline constexpr const char* change_unit = "change-unit";
inline constexpr const char* change_flatten = "change-flatten";
}  // namespace law

// Finite meet-semilattice: elements plus a total meet table, with
// idempotency, commutativity, and associativity checked exhaustively at
// construction. The induced order is a <= b iff a ^ b = a.
class FiniteSemilattice {
public:
  static FiniteSemilattice make(std::vector<Value> elements,
                                std::vector<std::vector<std::size_t>> table);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Value>& elements() const { return elements_; }
  const Value& element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(const Value& v) const;

  std::size_t meet_index(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }
  Value meet(const Value& a, const Value& b) const;
  bool leq_index(std::size_t i, std::size_t j) const {
    return table_[i][j] == i;
  }
  bool leq(const Value& a, const Value& b) const;

  // Pairs (i, j) with i < j in the order and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

private:
  FiniteSemilattice(std::vector<Value> elements,
                    std::vector<std::vector<std::size_t>> table)
      : elements_(std::move(elements)), table_(std::move(table)) {}
  std::size_t checked_index(const Value& v) const;
  std::vector<Value> elements_;
  std::vector<std::vector<std::size_t>> table_;
};

// The convex space of a semilattice: every interior coefficient takes
// the meet, the endpoints return their argument.
SpaceHandle semilattice_space(FiniteSemilattice s);
SpaceHandle semilattice_space(FiniteSemilattice s, std::string id);

// Finite nonempty subsets as set values.
Value manes_unit(const Value& x);
Value manes_flatten(const Value& set_of_sets);

// The set of supported points.
Value support(const Dist& d);

// Monad laws of distributions, checked on triple-nested inputs and the
// levels inside them.
LawReport check_dist_monad_laws(std::span<const Dist> triple_nested);

// Monad laws of finite nonempty subsets.
LawReport check_subset_monad_laws(std::span<const Value> nested_sets);

// The coefficient-change squares: support turns distribution units into
// subset units and commutes with the two flattenings.
LawReport check_coefficient_change(std::span<const Dist> nested);

// All three batteries above over one seeded stream of random nested
// structures on a small token carrier.
LawReport run_coefficient_change_suite(std::uint64_t seed, long cases);

// Subsets of the generators ordered by reverse inclusion; meet is union.
FiniteSemilattice free_semilattice(std::vector<Value> generators);

// Divisors of n under gcd.
FiniteSemilattice divisor_semilattice(long n);

// Pointwise possibility assignment on a finite carrier; the value of an
// event is the maximum over its members. Construction demands a
// normalized measure (some point at 1); meets may lose normalization and
// say so.
class PossibilityMeasure {
public:
  static PossibilityMeasure make(std::vector<Value> carrier,
                                 std::vector<Coeff> values);

  const std::vector<Value>& carrier() const { return carrier_; }
  const Coeff& at(const Value& x) const;
  Coeff event(std::span<const Value> members) const;
  bool normalized() const { return normalized_; }
  bool leq(const PossibilityMeasure& other) const;

  friend PossibilityMeasure possibility_meet(const PossibilityMeasure& m1,
                                             const PossibilityMeasure& m2);
  bool operator==(const PossibilityMeasure& o) const {
    return carrier_ == o.carrier_ && values_same(o);
  }

private:
  PossibilityMeasure(std::vector<Value> carrier, std::vector<Coeff> values);
  bool values_same(const PossibilityMeasure& o) const;
  std::vector<Value> carrier_;  // sorted
  std::vector<Coeff> values_;
  bool normalized_;
};

PossibilityMeasure possibility_meet(const PossibilityMeasure& m1,
                                    const PossibilityMeasure& m2);

}  // namespace cvx
