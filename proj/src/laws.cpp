#include "cvx/laws.hpp"

#include <algorithm>

#include "cvx/errors.hpp"
#include "cvx/serialize.hpp"

namespace cvx {

using nlohmann::json;

void LawReport::merge(LawReport other) {
  checked += other.checked;
  for (const auto& [name, n] : other.per_law) per_law[name] += n;
  failures.insert(failures.end(),
                  std::make_move_iterator(other.failures.begin()),
                  std::make_move_iterator(other.failures.end()));
}

namespace {

json case_to_json(const std::string& name, const LawCase& c) {
  json j;
  if (name == law::bracketing) {
    json ws = json::array();
    for (const auto& w : c.weights) ws.push_back(w.str());
    json ps = json::array();
    for (const auto& p : c.points) ps.push_back(value_to_json(p));
    j["weights"] = std::move(ws);
    j["points"] = std::move(ps);
    return j;
  }
  j["x"] = value_to_json(c.x);
  if (name != law::idempotency) j["y"] = value_to_json(c.y);
  if (name == law::associativity || name == law::one_independence) {
    j["z"] = value_to_json(c.z);
  }
  if (name != law::unit && name != law::derived_unit &&
      name != law::one_independence) {
    j["lambda"] = c.lambda.str();
  }
  if (name == law::associativity) j["mu"] = c.mu.str();
  return j;
}

LawFailure make_failure(const SpaceHandle& space, const std::string& name,
                        const LawCase& c, const Value& lhs, const Value& rhs) {
  (void)space;
  return LawFailure{name, case_to_json(name, c).dump(), lhs.str(), rhs.str()};
}

// lhs/rhs for each law, or nothing when the case does not apply.
std::optional<std::pair<Value, Value>> law_sides(const ConvexSpace& s,
                                                 const std::string& name,
                                                 const LawCase& c) {
  if (name == law::unit) {
    return std::pair{s.combine(Coeff(0, 1), c.x, c.y), c.y};
  }
  if (name == law::derived_unit) {
    return std::pair{s.combine(Coeff(1, 1), c.x, c.y), c.x};
  }
  if (name == law::idempotency) {
    return std::pair{s.combine(c.lambda, c.x, c.x), c.x};
  }
  if (name == law::commutativity) {
    return std::pair{s.combine(c.lambda, c.x, c.y),
                     s.combine(c.lambda.bar(), c.y, c.x)};
  }
  if (name == law::associativity) {
    const Coeff lm = c.lambda * c.mu;
    if (lm.is_one()) return std::nullopt;  // the independent corner
    const Coeff lt = lm;
    const Coeff mt(c.lambda.value() * c.mu.bar().value() /
                   (Rat(1) - lm.value()));
    return std::pair{s.combine(c.lambda, s.combine(c.mu, c.x, c.y), c.z),
                     s.combine(lt, c.x, s.combine(mt, c.y, c.z))};
  }
  throw ValidationError("unknown law '" + name + "'");
}

}  // namespace

std::optional<LawFailure> eval_law_case(const SpaceHandle& space,
                                        const std::string& name,
                                        const LawCase& c) {
  const ConvexSpace& s = *space;
  if (name == law::one_independence) {
    // With both outer coefficients at one, the re-association coefficient
    // is unconstrained: every choice must land on the first point.
    const Value outer = s.combine(Coeff(1, 1), s.combine(Coeff(1, 1), c.x, c.y),
                                  c.z);
    if (!s.equal(outer, c.x)) {
      return make_failure(space, name, c, outer, c.x);
    }
    for (const Coeff& t : {Coeff(0, 1), Coeff(1, 2), Coeff(1, 1)}) {
      const Value v = s.combine(Coeff(1, 1), c.x, s.combine(t, c.y, c.z));
      if (!s.equal(v, c.x)) return make_failure(space, name, c, v, c.x);
    }
    return std::nullopt;
  }
  if (name == law::bracketing) {
    const Value folded = cc_nary(space, c.weights, c.points);
    const auto trees = cc_all_bracketings(space, c.weights, c.points);
    for (const auto& t : trees) {
      if (!s.equal(folded, t)) return make_failure(space, name, c, folded, t);
    }
    return std::nullopt;
  }
  auto sides = law_sides(s, name, c);
  if (!sides) return std::nullopt;
  if (!s.equal(sides->first, sides->second)) {
    return make_failure(space, name, c, sides->first, sides->second);
  }
  return std::nullopt;
}

namespace {

const std::vector<std::string>& binary_laws() {
  static const std::vector<std::string> names = {
      law::unit, law::derived_unit, law::idempotency, law::commutativity,
      law::associativity};
  return names;
}

void run_case(const SpaceHandle& space, const std::string& name,
              const LawCase& c, LawReport& rep) {
  rep.count(name);
  if (auto f = eval_law_case(space, name, c)) rep.failures.push_back(*f);
}

void bracketing_case(const SpaceHandle& space, std::vector<Coeff> weights,
                     std::vector<Value> points, LawReport& rep) {
  LawCase c;
  c.weights = std::move(weights);
  c.points = std::move(points);
  run_case(space, law::bracketing, c, rep);
}

// n positive integer parts normalized to exact weights summing to one.
std::vector<Coeff> normalize_parts(const std::vector<long>& parts) {
  long total = 0;
  for (long p : parts) total += p;
  std::vector<Coeff> ws;
  ws.reserve(parts.size());
  for (long p : parts) ws.emplace_back(p, total);
  return ws;
}

}  // namespace

LawReport check_convex_space_laws(const SpaceHandle& space,
                                  std::span<const Value> samples,
                                  std::span<const Coeff> lambdas) {
  if (samples.empty()) throw DomainError("no samples to check");
  std::vector<Coeff> ls(lambdas.begin(), lambdas.end());
  for (const Coeff& edge : {Coeff(0, 1), Coeff(1, 1)}) {
    if (std::find(ls.begin(), ls.end(), edge) == ls.end()) ls.push_back(edge);
  }
  LawReport rep;
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      for (const auto& z : samples) {
        for (const auto& lam : ls) {
          for (const auto& mu : ls) {
            LawCase c;
            c.x = x;
            c.y = y;
            c.z = z;
            c.lambda = lam;
            c.mu = mu;
            for (const auto& name : binary_laws()) run_case(space, name, c, rep);
            if (lam.is_one() && mu.is_one()) {
              run_case(space, law::one_independence, c, rep);
            }
          }
        }
      }
    }
  }
  const std::size_t max_n = std::min<std::size_t>(5, samples.size());
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<Value> pts(samples.begin(), samples.begin() + n);
    bracketing_case(space, std::vector<Coeff>(n, Coeff(1, long(n))), pts, rep);
    std::vector<long> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(long(i) + 1);
    bracketing_case(space, normalize_parts(parts), pts, rep);
  }
  return rep;
}

LawReport check_convex_map(const std::function<Value(const Value&)>& f,
                           const SpaceHandle& dom, const SpaceHandle& cod,
                           std::span<const Value> samples,
                           std::span<const Coeff> lambdas) {
  LawReport rep;
  for (const auto& x : samples) {
    const Value fx = f(x);
    rep.count(law::convex_map);
    if (!cod->contains(fx)) {
      json j{{"x", value_to_json(x)}};
      rep.failures.push_back(
          {law::convex_map, j.dump(), fx.str(), "outside codomain"});
    }
  }
  if (!rep.pass()) return rep;
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      for (const auto& lam : lambdas) {
        rep.count(law::convex_map);
        const Value lhs = f(dom->combine(lam, x, y));
        const Value rhs = cod->combine(lam, f(x), f(y));
        if (!cod->equal(lhs, rhs)) {
          json j{{"x", value_to_json(x)},
                 {"y", value_to_json(y)},
                 {"lambda", lam.str()}};
          rep.failures.push_back(
              {law::convex_map, j.dump(), lhs.str(), rhs.str()});
        }
      }
    }
  }
  return rep;
}

LawReport run_law_suite(const SpaceHandle& space, std::uint64_t seed,
                        long cases) {
  if (cases <= 0) throw DomainError("case count must be positive");
  Rng rng(seed);
  LawReport rep;
  auto pick_coeff = [&](long salt) -> Coeff {
    switch (salt % 5) {
      case 0: return Coeff(0, 1);
      case 1: return Coeff(1, 1);
      case 2: return rng.coeff_interior();
      default: return rng.coeff();
    }
  };
  const long bracket_budget = std::min<long>(cases, 24);
  for (long i = 0; i < cases; ++i) {
    LawCase c;
    c.x = space->sample(rng);
    c.y = space->sample(rng);
    c.z = space->sample(rng);
    c.lambda = pick_coeff(i);
    c.mu = pick_coeff(i / 5 + 2);
    if (i % 11 == 0) c.lambda = c.mu = Coeff(1, 1);
    for (const auto& name : binary_laws()) run_case(space, name, c, rep);
    if (c.lambda.is_one() && c.mu.is_one()) {
      run_case(space, law::one_independence, c, rep);
    }
    if (i < bracket_budget) {
      const std::size_t n = 2 + std::size_t(i % 4);
      std::vector<Value> pts;
      std::vector<long> parts;
      for (std::size_t k = 0; k < n; ++k) {
        pts.push_back(space->sample(rng));
        parts.push_back(rng.range(1, 6));
      }
      bracketing_case(space, normalize_parts(parts), std::move(pts), rep);
    }
  }
  return rep;
}

bool recheck_law_case(const SpaceHandle& space, const std::string& name,
                      const std::string& case_json) {
  const json j = json_parse(case_json);
  LawCase c;
  if (name == law::bracketing) {
    for (const auto& w : j.at("weights")) {
      c.weights.push_back(Coeff::parse(w.get<std::string>()));
    }
    for (const auto& p : j.at("points")) c.points.push_back(value_from_json(p));
  } else {
    c.x = value_from_json(j.at("x"));
    c.y = j.contains("y") ? value_from_json(j.at("y")) : c.x;
    c.z = j.contains("z") ? value_from_json(j.at("z")) : c.x;
    if (j.contains("lambda")) {
      c.lambda = Coeff::parse(j.at("lambda").get<std::string>());
    }
    if (j.contains("mu")) c.mu = Coeff::parse(j.at("mu").get<std::string>());
  }
  return eval_law_case(space, name, c).has_value();
}

}  // namespace cvx
