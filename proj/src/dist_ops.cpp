#include "cvx/dist_ops.hpp"

#include <algorithm>
#include <map>

#include "cvx/errors.hpp"
#include "cvx/serialize.hpp"

namespace cvx {

Dist dist_make(std::vector<std::pair<Value, Coeff>> entries) {
  std::map<Value, Rat> merged;
  Rat total(0);
  for (auto& [pt, w] : entries) {
    if (w.is_zero()) continue;
    merged[pt] += w.value();
    total += w.value();
  }
  if (merged.empty()) throw DomainError("distribution with empty support");
  if (total != Rat(1)) {
    throw ValidationError("weights sum to " + total.str() + ", not 1");
  }
  Dist d;
  d.support.reserve(merged.size());
  for (auto& [pt, w] : merged) d.support.emplace_back(pt, Coeff(w));
  return d;
}

Dist dist_unit(const Value& x) {
  Dist d;
  d.support.emplace_back(x, Coeff(1, 1));
  return d;
}

Dist dist_map(const std::function<Value(const Value&)>& f, const Dist& d) {
  std::vector<std::pair<Value, Coeff>> entries;
  entries.reserve(d.support.size());
  for (const auto& [pt, w] : d.support) entries.emplace_back(f(pt), w);
  return dist_make(std::move(entries));
}

Dist dist_flatten(const Dist& dd) {
  std::vector<std::pair<Value, Coeff>> entries;
  for (const auto& [pt, outer] : dd.support) {
    if (!pt.is(Value::Kind::Dist)) {
      throw DomainError("flatten: point " + pt.str() +
                        " is not a distribution");
    }
    for (const auto& [inner_pt, inner_w] : pt.dist_value().support) {
      entries.emplace_back(inner_pt, outer * inner_w);
    }
  }
  return dist_make(std::move(entries));
}

const Coeff& dist_weight(const Dist& d, const Value& x) {
  static const Coeff zero(0, 1);
  auto it = std::lower_bound(d.support.begin(), d.support.end(), x,
                             [](const auto& entry, const Value& v) {
                               return Value::cmp(entry.first, v) < 0;
                             });
  if (it != d.support.end() && it->first == x) return it->second;
  return zero;
}

namespace {

class FreeSpace final : public ConvexSpace {
public:
  explicit FreeSpace(std::vector<Value> carrier)
      : ConvexSpace(make_id(carrier)), carrier_(std::move(carrier)) {}

  bool contains(const Value& v) const override {
    if (!v.is(Value::Kind::Dist)) return false;
    return std::all_of(v.dist_value().support.begin(),
                       v.dist_value().support.end(), [&](const auto& entry) {
                         return std::binary_search(carrier_.begin(),
                                                   carrier_.end(),
                                                   entry.first);
                       });
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    if (lambda.is_zero()) return y;
    if (lambda.is_one()) return x;
    std::vector<std::pair<Value, Coeff>> entries;
    for (const auto& [pt, w] : x.dist_value().support) {
      entries.emplace_back(pt, lambda * w);
    }
    for (const auto& [pt, w] : y.dist_value().support) {
      entries.emplace_back(pt, lambda.bar() * w);
    }
    return Value::dist(dist_make(std::move(entries)));
  }

  Value sample(Rng& rng) const override {
    return Value::dist(random_dist(rng, carrier_));
  }

private:
  static std::string make_id(const std::vector<Value>& carrier) {
    return "free(" + std::to_string(carrier.size()) + ")";
  }
  std::vector<Value> carrier_;  // sorted by the caller below
};

}  // namespace

SpaceHandle free_space(std::vector<Value> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (carrier.empty()) throw DomainError("free space needs a nonempty carrier");
  return std::make_shared<FreeSpace>(std::move(carrier));
}

Value barycenter(const SpaceHandle& space, const Dist& d) {
  std::vector<Coeff> weights;
  std::vector<Value> points;
  weights.reserve(d.support.size());
  points.reserve(d.support.size());
  for (const auto& [pt, w] : d.support) {
    weights.push_back(w);
    points.push_back(pt);
  }
  return cc_nary(space, weights, points);
}

namespace {

nlohmann::json dist_json(const Dist& d) {
  return value_to_json(Value::dist(d));
}

}  // namespace

LawReport check_algebra_laws(const SpaceHandle& space,
                             std::span<const Dist> nested,
                             const StructureMap& m_in) {
  StructureMap m = m_in ? m_in : StructureMap(barycenter);
  LawReport rep;
  auto check_unit = [&](const Value& x) {
    rep.count(law::algebra_unit);
    const Value back = m(space, dist_unit(x));
    if (!space->equal(back, x)) {
      nlohmann::json j{{"x", value_to_json(x)}};
      rep.failures.push_back(
          {law::algebra_unit, j.dump(), back.str(), x.str()});
    }
  };
  for (const Dist& dd : nested) {
    for (const auto& [pt, w] : dd.support) {
      if (!pt.is(Value::Kind::Dist)) {
        throw DomainError("algebra check needs distributions over "
                          "distributions");
      }
      for (const auto& [x, wx] : pt.dist_value().support) check_unit(x);
    }
    rep.count(law::algebra_multiplication);
    const Value via_flatten = m(space, dist_flatten(dd));
    const Value via_fibers = m(
        space, dist_map([&](const Value& p) { return m(space, p.dist_value()); },
                        dd));
    if (!space->equal(via_flatten, via_fibers)) {
      nlohmann::json j{{"dd", dist_json(dd)}};
      rep.failures.push_back({law::algebra_multiplication, j.dump(),
                              via_flatten.str(), via_fibers.str()});
    }
  }
  return rep;
}

Dist random_dist(Rng& rng, std::span<const Value> points) {
  if (points.empty()) throw DomainError("no points to distribute over");
  const std::size_t k =
      1 + std::size_t(rng.below(std::min<std::uint64_t>(points.size(), 4)));
  std::vector<std::pair<Value, Coeff>> entries;
  long total = 0;
  std::vector<long> parts;
  std::vector<const Value*> chosen;
  for (std::size_t i = 0; i < k; ++i) {
    chosen.push_back(&points[std::size_t(rng.below(points.size()))]);
    parts.push_back(rng.range(1, 6));
    total += parts.back();
  }
  for (std::size_t i = 0; i < k; ++i) {
    entries.emplace_back(*chosen[i], Coeff(parts[i], total));
  }
  return dist_make(std::move(entries));
}

LawReport run_algebra_suite(const SpaceHandle& space, std::uint64_t seed,
                            long cases) {
  if (cases <= 0) throw DomainError("case count must be positive");
  Rng rng(seed);
  std::vector<Dist> nested;
  nested.reserve(std::size_t(cases));
  for (long i = 0; i < cases; ++i) {
    std::vector<Value> pool;
    const std::size_t pool_size = 2 + std::size_t(rng.below(3));
    for (std::size_t j = 0; j < pool_size; ++j) {
      pool.push_back(space->sample(rng));
    }
    const std::size_t layers = 1 + std::size_t(rng.below(3));
    std::vector<Value> inner;
    for (std::size_t j = 0; j < layers; ++j) {
      inner.push_back(Value::dist(random_dist(rng, pool)));
    }
    nested.push_back(random_dist(rng, inner));
  }
  return check_algebra_laws(space, nested);
}

}  // namespace cvx
