#include "cvx/fixtures.hpp"

#include <algorithm>

#include "cvx/errors.hpp"

namespace cvx {

namespace {

// Finite token space with an arbitrary interior rule; endpoints behave
// lawfully so that only the intended breakage shows.
class TokenTableSpace final : public ConvexSpace {
public:
  using Rule = std::function<Value(const Coeff&, const Value&, const Value&)>;

  TokenTableSpace(std::string id, std::vector<Value> elements, Rule rule)
      : ConvexSpace(std::move(id)),
        elements_(std::move(elements)),
        rule_(std::move(rule)) {}

  bool contains(const Value& v) const override {
    return std::find(elements_.begin(), elements_.end(), v) != elements_.end();
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    if (lambda.is_zero()) return y;
    if (lambda.is_one()) return x;
    return rule_(lambda, x, y);
  }

  Value sample(Rng& rng) const override {
    return elements_[std::size_t(rng.below(elements_.size()))];
  }

private:
  std::vector<Value> elements_;
  Rule rule_;
};

// Unit-interval carrier with a custom mixing rule on the coordinate.
class WarpedIntervalSpace final : public ConvexSpace {
public:
  using Rule = std::function<Rat(const Coeff&, const Rat&, const Rat&)>;

  WarpedIntervalSpace(std::string id, Rule rule)
      : ConvexSpace(std::move(id)), rule_(std::move(rule)) {}

  bool contains(const Value& v) const override {
    if (!v.is(Value::Kind::Vec) || v.vec_coords().size() != 1) return false;
    const Rat& t = v.vec_coords()[0];
    return t >= Rat(0) && t <= Rat(1);
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    return Value::vec({rule_(lambda, x.vec_coords()[0], y.vec_coords()[0])});
  }

  Value sample(Rng& rng) const override {
    return Value::vec({rng.coeff(10).value()});
  }

private:
  Rule rule_;
};

}  // namespace

SpaceHandle corrupt_commutativity_space() {
  return std::make_shared<TokenTableSpace>(
      "fixture(corrupt-commutativity)",
      std::vector<Value>{Value::token("a"), Value::token("b")},
      [](const Coeff&, const Value& x, const Value&) { return x; });
}

SpaceHandle corrupt_associativity_space() {
  return std::make_shared<TokenTableSpace>(
      "fixture(corrupt-associativity)",
      std::vector<Value>{Value::token("a"), Value::token("b"),
                         Value::token("c")},
      [](const Coeff&, const Value& x, const Value& y) {
        if (x == y) return x;
        static const Value a = Value::token("a");
        static const Value b = Value::token("b");
        static const Value c = Value::token("c");
        if ((x == a && y == b) || (x == b && y == a)) return c;
        if ((x == b && y == c) || (x == c && y == b)) return a;
        return b;  // the a/c pair
      });
}

SpaceHandle perturbed_interval_swap() {
  // lambda weights the wrong argument; already the unit law fails.
  return std::make_shared<WarpedIntervalSpace>(
      "perturbed(swap)", [](const Coeff& lam, const Rat& x, const Rat& y) {
        return lam.bar().value() * x + lam.value() * y;
      });
}

SpaceHandle perturbed_interval_smoothstep() {
  // Monotone reparametrization fixing 0, 1/2, and 1: the endpoint laws,
  // idempotency, and commutativity all survive, associativity does not.
  return std::make_shared<WarpedIntervalSpace>(
      "perturbed(smoothstep)", [](const Coeff& lam, const Rat& x, const Rat& y) {
        const Rat& l = lam.value();
        const Rat s = l * l * (Rat(3) - Rat(2) * l);
        return s * x + (Rat(1) - s) * y;
      });
}

SpaceHandle perturbed_interval_meet() {
  // A lawful combinatorial structure on [0,1]: every law passes, and
  // only the affine-functional check tells it apart from the standard
  // geometric structure.
  return std::make_shared<WarpedIntervalSpace>(
      "perturbed(meet)", [](const Coeff& lam, const Rat& x, const Rat& y) {
        if (lam.is_zero()) return y;
        if (lam.is_one()) return x;
        return x < y ? x : y;
      });
}

std::vector<std::pair<std::string, SpaceHandle>> rigidity_perturbations() {
  return {{"swap", perturbed_interval_swap()},
          {"smoothstep", perturbed_interval_smoothstep()},
          {"meet", perturbed_interval_meet()}};
}

SpaceHandle fixture_space(const std::string& name) {
  if (name == "corrupt-commutativity") return corrupt_commutativity_space();
  if (name == "corrupt-associativity") return corrupt_associativity_space();
  if (name == "perturbed-swap") return perturbed_interval_swap();
  if (name == "perturbed-smoothstep") return perturbed_interval_smoothstep();
  if (name == "perturbed-meet") return perturbed_interval_meet();
  throw ValidationError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"corrupt-commutativity", "corrupt-associativity", "perturbed-swap",
          "perturbed-smoothstep", "perturbed-meet"};
}

}  // namespace cvx
