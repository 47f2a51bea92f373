#include "cvx/semilattice.hpp"

#include <algorithm>
#include <numeric>

#include "cvx/errors.hpp"
#include "cvx/serialize.hpp"

namespace cvx {

using nlohmann::json;

FiniteSemilattice FiniteSemilattice::make(
    std::vector<Value> elements, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = elements.size();
  if (n == 0) throw ValidationError("semilattice needs elements");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (elements[i] == elements[j]) {
        throw ValidationError("repeated element " + elements[i].str());
      }
    }
  }
  if (table.size() != n) throw ValidationError("meet table has wrong height");
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("meet table has ragged rows");
    for (std::size_t v : row) {
      if (v >= n) throw ValidationError("meet table index out of range");
    }
  }
  auto name = [&](std::size_t i) { return elements[i].str(); };
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i][i] != i) {
      throw ValidationError("idempotency fails at " + name(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] != table[j][i]) {
        throw ValidationError("commutativity fails at (" + name(i) + ", " +
                              name(j) + ")");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw ValidationError("associativity fails at (" + name(i) + ", " +
                                name(j) + ", " + name(k) + ")");
        }
      }
    }
  }
  return FiniteSemilattice(std::move(elements), std::move(table));
}

std::optional<std::size_t> FiniteSemilattice::index_of(const Value& v) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == v) return i;
  }
  return std::nullopt;
}

std::size_t FiniteSemilattice::checked_index(const Value& v) const {
  if (auto i = index_of(v)) return *i;
  throw DomainError(v.str() + " is not a semilattice element");
}

Value FiniteSemilattice::meet(const Value& a, const Value& b) const {
  return elements_[table_[checked_index(a)][checked_index(b)]];
}

bool FiniteSemilattice::leq(const Value& a, const Value& b) const {
  return leq_index(checked_index(a), checked_index(b));
}

std::vector<std::pair<std::size_t, std::size_t>>
FiniteSemilattice::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_index(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != i && k != j && leq_index(i, k) && leq_index(k, j)) {
          direct = false;
        }
      }
      if (direct) covers.emplace_back(i, j);
    }
  }
  return covers;
}

namespace {

class SemilatticeSpace final : public ConvexSpace {
public:
  SemilatticeSpace(FiniteSemilattice s, std::string id)
      : ConvexSpace(std::move(id)), s_(std::move(s)) {}

  bool contains(const Value& v) const override {
    return s_.index_of(v).has_value();
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    if (lambda.is_zero()) return y;
    if (lambda.is_one()) return x;
    return s_.meet(x, y);
  }

  Value sample(Rng& rng) const override {
    return s_.element(std::size_t(rng.below(s_.size())));
  }

private:
  FiniteSemilattice s_;
};

}  // namespace

SpaceHandle semilattice_space(FiniteSemilattice s) {
  const std::string id = "semilattice(" + std::to_string(s.size()) + ")";
  return semilattice_space(std::move(s), id);
}

SpaceHandle semilattice_space(FiniteSemilattice s, std::string id) {
  return std::make_shared<SemilatticeSpace>(std::move(s), std::move(id));
}

Value manes_unit(const Value& x) { return Value::set({x}); }

Value manes_flatten(const Value& set_of_sets) {
  if (!set_of_sets.is(Value::Kind::Set)) {
    throw DomainError("flatten needs a set, got " + set_of_sets.str());
  }
  const auto& outer = set_of_sets.set_members();
  if (outer.empty()) throw DomainError("flatten of the empty set");
  std::vector<Value> members;
  for (const auto& inner : outer) {
    if (!inner.is(Value::Kind::Set)) {
      throw DomainError("flatten needs sets of sets, got member " +
                        inner.str());
    }
    if (inner.set_members().empty()) {
      throw DomainError("flatten over an empty member set");
    }
    members.insert(members.end(), inner.set_members().begin(),
                   inner.set_members().end());
  }
  return Value::set(std::move(members));
}

Value support(const Dist& d) {
  std::vector<Value> members;
  members.reserve(d.support.size());
  for (const auto& [pt, w] : d.support) members.push_back(pt);
  return Value::set(std::move(members));
}

namespace {

void expect_equal(LawReport& rep, const char* name, const json& inputs,
                  const Value& lhs, const Value& rhs) {
  rep.count(name);
  if (lhs != rhs) {
    rep.failures.push_back({name, inputs.dump(), lhs.str(), rhs.str()});
  }
}

void expect_dist_equal(LawReport& rep, const char* name, const json& inputs,
                       const Dist& lhs, const Dist& rhs) {
  expect_equal(rep, name, inputs, Value::dist(lhs), Value::dist(rhs));
}

}  // namespace

LawReport check_dist_monad_laws(std::span<const Dist> triple_nested) {
  LawReport rep;
  for (const Dist& ddd : triple_nested) {
    const json input{{"ddd", value_to_json(Value::dist(ddd))}};
    // Unit laws at the middle level.
    for (const auto& [dd_v, w_outer] : ddd.support) {
      for (const auto& [d_v, w_inner] : dd_v.dist_value().support) {
        const Dist& d = d_v.dist_value();
        expect_dist_equal(rep, law::giry_left_unit, input,
                          dist_flatten(dist_unit(d_v)), d);
        expect_dist_equal(
            rep, law::giry_right_unit, input,
            dist_flatten(dist_map(
                [](const Value& x) { return Value::dist(dist_unit(x)); }, d)),
            d);
      }
    }
    expect_dist_equal(
        rep, law::giry_associativity, input,
        dist_flatten(dist_flatten(ddd)),
        dist_flatten(dist_map(
            [](const Value& dd) {
              return Value::dist(dist_flatten(dd.dist_value()));
            },
            ddd)));
  }
  return rep;
}

LawReport check_subset_monad_laws(std::span<const Value> nested_sets) {
  LawReport rep;
  for (const Value& ccc : nested_sets) {
    const json input{{"ccc", value_to_json(ccc)}};
    for (const auto& cc_v : ccc.set_members()) {
      for (const auto& c_v : cc_v.set_members()) {
        expect_equal(rep, law::manes_left_unit, input,
                     manes_flatten(manes_unit(c_v)), c_v);
        std::vector<Value> units;
        for (const auto& x : c_v.set_members()) units.push_back(manes_unit(x));
        expect_equal(rep, law::manes_right_unit, input,
                     manes_flatten(Value::set(std::move(units))), c_v);
      }
    }
    std::vector<Value> flattened;
    for (const auto& cc_v : ccc.set_members()) {
      flattened.push_back(manes_flatten(cc_v));
    }
    expect_equal(rep, law::manes_associativity, input,
                 manes_flatten(manes_flatten(ccc)),
                 manes_flatten(Value::set(std::move(flattened))));
  }
  return rep;
}

LawReport check_coefficient_change(std::span<const Dist> nested) {
  LawReport rep;
  for (const Dist& dd : nested) {
    const json input{{"dd", value_to_json(Value::dist(dd))}};
    for (const auto& [d_v, w] : dd.support) {
      for (const auto& [x, wx] : d_v.dist_value().support) {
        expect_equal(rep, law::change_unit, input, support(dist_unit(x)),
                     manes_unit(x));
      }
    }
    const Value lhs = support(dist_flatten(dd));
    const Value rhs = manes_flatten(support(dist_map(
        [](const Value& d) { return support(d.dist_value()); }, dd)));
    expect_equal(rep, law::change_flatten, input, lhs, rhs);
  }
  return rep;
}

LawReport run_coefficient_change_suite(std::uint64_t seed, long cases) {
  if (cases <= 0) throw DomainError("case count must be positive");
  Rng rng(seed);
  const std::vector<Value> carrier = {Value::token("a"), Value::token("b"),
                                      Value::token("c"), Value::token("d")};
  auto random_subset = [&](std::span<const Value> pool) {
    std::vector<Value> members;
    const std::size_t k = 1 + std::size_t(rng.below(pool.size()));
    for (std::size_t i = 0; i < k; ++i) {
      members.push_back(pool[std::size_t(rng.below(pool.size()))]);
    }
    return Value::set(std::move(members));
  };
  std::vector<Dist> nested;
  std::vector<Dist> triple;
  std::vector<Value> nested_sets;
  for (long i = 0; i < cases; ++i) {
    std::vector<Value> inners;
    const std::size_t n_inner = 1 + std::size_t(rng.below(3));
    for (std::size_t j = 0; j < n_inner; ++j) {
      inners.push_back(Value::dist(random_dist(rng, carrier)));
    }
    nested.push_back(random_dist(rng, inners));
    std::vector<Value> middles;
    const std::size_t n_mid = 1 + std::size_t(rng.below(2));
    for (std::size_t j = 0; j < n_mid; ++j) {
      middles.push_back(Value::dist(random_dist(rng, inners)));
    }
    triple.push_back(random_dist(rng, middles));
    std::vector<Value> middle_sets;
    const std::size_t n_sets = 1 + std::size_t(rng.below(3));
    for (std::size_t j = 0; j < n_sets; ++j) {
      std::vector<Value> inner_sets;
      const std::size_t n_members = 1 + std::size_t(rng.below(3));
      for (std::size_t l = 0; l < n_members; ++l) {
        inner_sets.push_back(random_subset(carrier));
      }
      middle_sets.push_back(Value::set(std::move(inner_sets)));
    }
    nested_sets.push_back(Value::set(std::move(middle_sets)));
  }
  LawReport rep = check_dist_monad_laws(triple);
  rep.merge(check_subset_monad_laws(nested_sets));
  rep.merge(check_coefficient_change(nested));
  return rep;
}

FiniteSemilattice free_semilattice(std::vector<Value> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  const std::size_t n = generators.size();
  if (n == 0) throw DomainError("free semilattice needs generators");
  if (n > 10) throw DomainError("free semilattice capped at 10 generators");
  std::vector<Value> elements;
  elements.reserve((1u << n) - 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Value> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) members.push_back(generators[i]);
    }
    elements.push_back(Value::set(std::move(members)));
  }
  // Element index is mask - 1; the meet of two subsets is their union.
  std::vector<std::vector<std::size_t>> table(elements.size());
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    table[a - 1].resize(elements.size());
    for (std::uint32_t b = 1; b < (1u << n); ++b) {
      table[a - 1][b - 1] = (a | b) - 1;
    }
  }
  return FiniteSemilattice::make(std::move(elements), std::move(table));
}

FiniteSemilattice divisor_semilattice(long n) {
  if (n <= 0) throw DomainError("divisor semilattice needs n >= 1");
  std::vector<long> divisors;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  std::vector<Value> elements;
  elements.reserve(divisors.size());
  for (long d : divisors) elements.push_back(Value::scalar(Rat(d)));
  std::vector<std::vector<std::size_t>> table(divisors.size());
  auto index_of = [&](long v) {
    return std::size_t(std::lower_bound(divisors.begin(), divisors.end(), v) -
                       divisors.begin());
  };
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    table[i].resize(divisors.size());
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      table[i][j] = index_of(std::gcd(divisors[i], divisors[j]));
    }
  }
  return FiniteSemilattice::make(std::move(elements), std::move(table));
}

PossibilityMeasure::PossibilityMeasure(std::vector<Value> carrier,
                                       std::vector<Coeff> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  normalized_ = std::any_of(values_.begin(), values_.end(),
                            [](const Coeff& c) { return c.is_one(); });
}

PossibilityMeasure PossibilityMeasure::make(std::vector<Value> carrier,
                                            std::vector<Coeff> values) {
  if (carrier.empty()) throw DomainError("possibility measure needs a carrier");
  if (carrier.size() != values.size()) {
    throw ValidationError("carrier and value counts differ");
  }
  std::vector<std::size_t> order(carrier.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return carrier[a] < carrier[b];
  });
  std::vector<Value> sorted_carrier;
  std::vector<Coeff> sorted_values;
  for (std::size_t i : order) {
    if (!sorted_carrier.empty() && sorted_carrier.back() == carrier[i]) {
      throw ValidationError("repeated carrier point " + carrier[i].str());
    }
    sorted_carrier.push_back(carrier[i]);
    sorted_values.push_back(values[i]);
  }
  PossibilityMeasure m(std::move(sorted_carrier), std::move(sorted_values));
  if (!m.normalized_) {
    throw ValidationError("no point attains 1; the measure is not normalized");
  }
  return m;
}

const Coeff& PossibilityMeasure::at(const Value& x) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), x);
  if (it == carrier_.end() || *it != x) {
    throw DomainError(x.str() + " is outside the carrier");
  }
  return values_[std::size_t(it - carrier_.begin())];
}

Coeff PossibilityMeasure::event(std::span<const Value> members) const {
  Coeff best(0, 1);
  for (const auto& x : members) {
    const Coeff& v = at(x);
    if (best < v) best = v;
  }
  return best;
}

bool PossibilityMeasure::leq(const PossibilityMeasure& other) const {
  if (carrier_ != other.carrier_) {
    throw DomainError("possibility measures live on different carriers");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (other.values_[i] < values_[i]) return false;
  }
  return true;
}

bool PossibilityMeasure::values_same(const PossibilityMeasure& o) const {
  return values_ == o.values_;
}

PossibilityMeasure possibility_meet(const PossibilityMeasure& m1,
                                    const PossibilityMeasure& m2) {
  if (m1.carrier_ != m2.carrier_) {
    throw DomainError("possibility measures live on different carriers");
  }
  std::vector<Coeff> values;
  values.reserve(m1.values_.size());
  for (std::size_t i = 0; i < m1.values_.size(); ++i) {
    values.push_back(std::min(m1.values_[i], m2.values_[i]));
  }
  // Bypasses make(): the pointwise minimum of two normalized measures
  // may peak below one, and the result reports that through normalized().
  return PossibilityMeasure(m1.carrier_, std::move(values));
}

}  // namespace cvx
