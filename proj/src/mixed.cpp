#include "cvx/mixed.hpp"

#include <algorithm>
#include <deque>

#include "cvx/errors.hpp"

namespace cvx {

namespace {
constexpr const char* kFibTag = "fib";
constexpr const char* kInfTag = "inf";
constexpr const char* kStakeTag = "stake";
constexpr std::size_t kUnset = std::size_t(-1);

using EdgeMap = std::map<std::pair<std::size_t, std::size_t>, Transport>;
}  // namespace

Value fibered_element(const Value& base_point, const Value& fiber_value) {
  return Value::tagged(kFibTag, {base_point, fiber_value});
}

const Value& fibered_base(const Value& v) {
  if (!v.is(Value::Kind::Tagged) || v.tag() != kFibTag ||
      v.tagged_parts().size() != 2) {
    throw DomainError(v.str() + " is not a fibered element");
  }
  return v.tagged_parts()[0];
}

const Value& fibered_value(const Value& v) {
  fibered_base(v);
  return v.tagged_parts()[1];
}

namespace {

// step[to][from] is the node one covering edge below `from` on a chosen
// path toward `to`; defined whenever to <= from.
std::vector<std::vector<std::size_t>> build_steps(
    const FiniteSemilattice& base,
    const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = base.size();
  std::vector<std::vector<std::size_t>> step(
      n, std::vector<std::size_t>(n, kUnset));
  for (std::size_t to = 0; to < n; ++to) {
    step[to][to] = to;
    std::deque<std::size_t> queue{to};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [lower, upper] : covers) {
        if (lower == u && step[to][upper] == kUnset) {
          step[to][upper] = u;
          queue.push_back(upper);
        }
      }
    }
  }
  return step;
}

Value walk_down(const EdgeMap& edges,
                const std::vector<std::vector<std::size_t>>& step,
                std::size_t to, std::size_t from, Value v) {
  std::size_t cur = from;
  while (cur != to) {
    const std::size_t next = step[to][cur];
    v = edges.at({next, cur})(v);
    cur = next;
  }
  return v;
}

class FiberedSpace final : public ConvexSpace {
public:
  FiberedSpace(FiniteSemilattice base, std::vector<SpaceHandle> fibers,
               EdgeMap edges, std::vector<std::vector<std::size_t>> step)
      : ConvexSpace("fibered(" + std::to_string(base.size()) + ")"),
        base_(std::move(base)),
        fibers_(std::move(fibers)),
        edges_(std::move(edges)),
        step_(std::move(step)) {}

  bool contains(const Value& v) const override {
    if (!v.is(Value::Kind::Tagged) || v.tag() != kFibTag ||
        v.tagged_parts().size() != 2) {
      return false;
    }
    const auto s = base_.index_of(v.tagged_parts()[0]);
    return s && fibers_[*s]->contains(v.tagged_parts()[1]);
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    if (lambda.is_zero()) return y;
    if (lambda.is_one()) return x;
    const std::size_t s = *base_.index_of(fibered_base(x));
    const std::size_t t = *base_.index_of(fibered_base(y));
    const std::size_t m = base_.meet_index(s, t);
    const Value xm = walk_down(edges_, step_, m, s, fibered_value(x));
    const Value ym = walk_down(edges_, step_, m, t, fibered_value(y));
    return fibered_element(base_.element(m),
                           fibers_[m]->combine(lambda, xm, ym));
  }

  bool equal(const Value& a, const Value& b) const override {
    const auto sa = base_.index_of(fibered_base(a));
    const auto sb = base_.index_of(fibered_base(b));
    if (!sa || !sb || *sa != *sb) return false;
    return fibers_[*sa]->equal(fibered_value(a), fibered_value(b));
  }

  Value sample(Rng& rng) const override {
    const std::size_t s = std::size_t(rng.below(base_.size()));
    return fibered_element(base_.element(s), fibers_[s]->sample(rng));
  }

private:
  FiniteSemilattice base_;
  std::vector<SpaceHandle> fibers_;
  EdgeMap edges_;
  std::vector<std::vector<std::size_t>> step_;
};

}  // namespace

SpaceHandle fibered_space_make(FiniteSemilattice base,
                               std::vector<SpaceHandle> fibers,
                               const EdgeMap& transports) {
  const std::size_t n = base.size();
  if (fibers.size() != n) {
    throw ValidationError("expected one fiber per base element");
  }
  const auto covers = base.covering_pairs();
  for (const auto& cover : covers) {
    if (!transports.count(cover)) {
      throw ValidationError(
          "missing transport for covering pair (" +
          base.element(cover.first).str() + ", " +
          base.element(cover.second).str() + ")");
    }
  }
  for (const auto& [key, t] : transports) {
    if (std::find(covers.begin(), covers.end(), key) == covers.end()) {
      throw ValidationError("transport on non-covering pair (" +
                            std::to_string(key.first) + ", " +
                            std::to_string(key.second) + ")");
    }
    (void)t;
  }
  const auto step = build_steps(base, covers);

  // Deterministic fiber samples for the construction-time checks.
  Rng rng(0xf1b5eedull);
  std::vector<std::vector<Value>> samples(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (int i = 0; i < 4; ++i) samples[s].push_back(fibers[s]->sample(rng));
  }
  const std::vector<Coeff> lambdas = {Coeff(0, 1), Coeff(1, 1), Coeff(1, 2),
                                      Coeff(1, 3)};
  for (const auto& [key, t] : transports) {
    const auto& [lower, upper] = key;
    const LawReport rep =
        check_convex_map(t, fibers[upper], fibers[lower], samples[upper],
                         lambdas);
    if (!rep.pass()) {
      throw ValidationError("transport for covering pair (" +
                            base.element(lower).str() + ", " +
                            base.element(upper).str() +
                            ") is not a convex map");
    }
  }
  for (std::size_t s2 = 0; s2 < n; ++s2) {
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      if (!base.leq_index(s1, s2)) continue;
      for (std::size_t s0 = 0; s0 < n; ++s0) {
        if (!base.leq_index(s0, s1)) continue;
        for (const auto& v : samples[s2]) {
          const Value direct = walk_down(transports, step, s0, s2, v);
          const Value via =
              walk_down(transports, step, s0, s1,
                        walk_down(transports, step, s1, s2, v));
          if (!fibers[s0]->equal(direct, via)) {
            throw ValidationError(
                "functoriality fails at (" + base.element(s0).str() + ", " +
                base.element(s1).str() + ", " + base.element(s2).str() + ")");
          }
        }
      }
    }
  }
  return std::make_shared<FiberedSpace>(std::move(base), std::move(fibers),
                                        transports, step);
}

Value infinity_value() { return Value::tagged(kInfTag, {}); }

namespace {

class AdjoinInfinity final : public ConvexSpace {
public:
  explicit AdjoinInfinity(SpaceHandle inner)
      : ConvexSpace("adjoin-infinity(" + inner->id() + ")"),
        inner_(std::move(inner)) {}

  bool contains(const Value& v) const override {
    return v == infinity_value() || inner_->contains(v);
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    if (lambda.is_zero()) return y;
    if (lambda.is_one()) return x;
    if (x == infinity_value() || y == infinity_value()) {
      return infinity_value();
    }
    return inner_->combine(lambda, x, y);
  }

  bool equal(const Value& a, const Value& b) const override {
    const bool ia = a == infinity_value();
    const bool ib = b == infinity_value();
    if (ia || ib) return ia && ib;
    return inner_->equal(a, b);
  }

  Value sample(Rng& rng) const override {
    if (rng.chance(1, 5)) return infinity_value();
    return inner_->sample(rng);
  }

private:
  SpaceHandle inner_;
};

}  // namespace

SpaceHandle adjoin_infinity(const SpaceHandle& inner) {
  return std::make_shared<AdjoinInfinity>(inner);
}

SpaceHandle face_classifier() {
  FiniteSemilattice fc = FiniteSemilattice::make(
      {Value::token("i"), Value::token("f")}, {{0, 0}, {0, 1}});
  return semilattice_space(std::move(fc), "face-classifier");
}

Value lottery_stake(const Rat& p) {
  if (p < Rat(0) || p >= Rat(1)) {
    throw DomainError("stake " + p.str() + " outside [0,1)");
  }
  return Value::tagged(kStakeTag, {Value::scalar(p)});
}

Value lottery_prize(const Dist& d) {
  for (const auto& [pt, w] : d.support) {
    if (pt != Value::token("a") && pt != Value::token("b")) {
      throw DomainError("prize over foreign point " + pt.str());
    }
  }
  return Value::dist(d);
}

namespace {

class LotterySpace final : public ConvexSpace {
public:
  LotterySpace() : ConvexSpace("lottery") {}

  static bool is_stake(const Value& v) {
    return v.is(Value::Kind::Tagged) && v.tag() == kStakeTag &&
           v.tagged_parts().size() == 1 &&
           v.tagged_parts()[0].is(Value::Kind::Scalar);
  }

  static const Rat& stake_of(const Value& v) {
    return v.tagged_parts()[0].scalar_value();
  }

  bool contains(const Value& v) const override {
    if (is_stake(v)) {
      const Rat& p = stake_of(v);
      return p >= Rat(0) && p < Rat(1);
    }
    if (!v.is(Value::Kind::Dist)) return false;
    return std::all_of(v.dist_value().support.begin(),
                       v.dist_value().support.end(), [](const auto& entry) {
                         return entry.first == Value::token("a") ||
                                entry.first == Value::token("b");
                       });
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    if (lambda.is_zero()) return y;
    if (lambda.is_one()) return x;
    const Rat& l = lambda.value();
    const Rat lb = lambda.bar().value();
    const bool sx = is_stake(x);
    const bool sy = is_stake(y);
    if (sx && sy) return lottery_stake(l * stake_of(x) + lb * stake_of(y));
    // A prize counts as certainty: its stake coordinate is 1.
    if (sx) return lottery_stake(l * stake_of(x) + lb);
    if (sy) return lottery_stake(l + lb * stake_of(y));
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
    if (rng.chance(1, 2)) {
      const long den = rng.range(2, 9);
      return lottery_stake(Rat(rng.range(0, den - 1), den));
    }
    static const std::vector<Value> prize_points = {Value::token("a"),
                                                    Value::token("b")};
    return Value::dist(random_dist(rng, prize_points));
  }
};

}  // namespace

SpaceHandle lottery_space() { return std::make_shared<LotterySpace>(); }

}  // namespace cvx
