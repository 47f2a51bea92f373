#include <doctest.h>

#include <vector>

#include "cvx/dist_ops.hpp"
#include "cvx/errors.hpp"
#include "cvx/geometric.hpp"
#include "support/oracles.hpp"

using namespace cvx;

namespace {

Value q(long n, long d = 1) { return Value::vec({Rat(n, d)}); }

Dist two_point(const Value& a, const Value& b, const Coeff& wa) {
  return dist_make({{a, wa}, {b, wa.bar()}});
}

}  // namespace

TEST_CASE("distributions canonicalize on construction") {
  const Value a = Value::token("a");
  const Value b = Value::token("b");
  const Dist d = dist_make(
      {{b, Coeff(1, 4)}, {a, Coeff(1, 2)}, {b, Coeff(1, 4)}, {a, Coeff(0, 1)}});
  REQUIRE(d.support.size() == 2);
  CHECK(d.support[0].first == a);
  CHECK(d.support[0].second == Coeff(1, 2));
  CHECK(d.support[1].first == b);
  CHECK(d.support[1].second == Coeff(1, 2));

  CHECK_THROWS_AS(dist_make({{a, Coeff(1, 2)}}), ValidationError);
  CHECK_THROWS_AS(dist_make({}), DomainError);
  CHECK(dist_weight(d, a) == Coeff(1, 2));
  CHECK(dist_weight(d, Value::token("zzz")) == Coeff(0, 1));

  const Dist u = dist_unit(a);
  CHECK(u.support.size() == 1);
  CHECK(u.support[0].second.is_one());
}

TEST_CASE("pushforward merges colliding images") {
  const Dist d = dist_make({{q(0), Coeff(1, 4)},
                            {q(1), Coeff(1, 4)},
                            {q(2), Coeff(1, 2)}});
  const Dist image = dist_map(
      [](const Value& v) {
        return v.vec_coords()[0] < Rat(2) ? Value::token("lo")
                                          : Value::token("hi");
      },
      d);
  REQUIRE(image.support.size() == 2);
  CHECK(dist_weight(image, Value::token("lo")) == Coeff(1, 2));
  CHECK(dist_weight(image, Value::token("hi")) == Coeff(1, 2));
}

TEST_CASE("flattening multiplies weights through, against the oracle") {
  Rng rng(21);
  const auto space = vector_space(1);
  std::vector<Value> pool;
  for (int i = 0; i < 5; ++i) pool.push_back(space->sample(rng));
  for (int round = 0; round < 50; ++round) {
    std::vector<std::pair<Value, Coeff>> outer;
    const long n = rng.range(2, 4);
    std::vector<long> parts;
    long total = 0;
    for (long i = 0; i < n; ++i) {
      parts.push_back(rng.range(1, 5));
      total += parts.back();
    }
    for (long i = 0; i < n; ++i) {
      outer.emplace_back(Value::dist(random_dist(rng, pool)),
                         Coeff(Rat(parts[i]) / Rat(total)));
    }
    const Dist dd = dist_make(std::move(outer));
    const Dist flat = dist_flatten(dd);
    const auto expected = oracle::flatten_weights(dd);
    REQUIRE(flat.support.size() == expected.size());
    for (const auto& [pt, w] : flat.support) {
      CHECK(expected.at(pt) == w.value());
    }
  }
  CHECK_THROWS_AS(dist_flatten(dist_unit(Value::token("not-a-dist"))),
                  DomainError);
}

TEST_CASE("barycenter is the exact mean") {
  const auto space = vector_space(1);
  const Dist d = dist_make(
      {{q(0), Coeff(1, 6)}, {q(3), Coeff(1, 3)}, {q(6), Coeff(1, 2)}});
  CHECK(barycenter(space, d) == q(4));
  CHECK(barycenter(space, dist_unit(q(9))) == q(9));
  CHECK_THROWS_AS(barycenter(space, dist_unit(Value::token("a"))),
                  DomainError);
}

TEST_CASE("the free space is the free algebra") {
  const std::vector<Value> carrier = {Value::token("a"), Value::token("b"),
                                      Value::token("c")};
  const auto space = free_space(carrier);
  const Value pa = Value::dist(dist_unit(carrier[0]));
  const Value pb = Value::dist(dist_unit(carrier[1]));
  CHECK(space->contains(pa));
  CHECK(!space->contains(Value::dist(dist_unit(Value::token("zzz")))));

  const Value mixed = cc(space, Coeff(1, 3), pa, pb);
  const Dist& m = mixed.dist_value();
  CHECK(dist_weight(m, carrier[0]) == Coeff(1, 3));
  CHECK(dist_weight(m, carrier[1]) == Coeff(2, 3));

  // On the free algebra the structure map is flattening.
  const Dist dd = two_point(mixed, pa, Coeff(1, 2));
  const Value via_barycenter = barycenter(space, dd);
  const auto expected = oracle::flatten_weights(dd);
  for (const auto& [pt, w] : via_barycenter.dist_value().support) {
    CHECK(expected.at(pt) == w.value());
  }
}

TEST_CASE("algebra squares hold for the true structure map") {
  for (const auto& space :
       {vector_space(1), vector_space(2),
        free_space({Value::token("a"), Value::token("b")})}) {
    const auto report = run_algebra_suite(space, 31, 80);
    CHECK(report.pass());
    CHECK(report.per_law.at(law::algebra_multiplication) >= 80);
  }
}

TEST_CASE("a broken structure map trips the multiplication square") {
  const auto space = vector_space(1);
  // Left scan with raw weights instead of renormalized ones.
  const StructureMap broken = [](const SpaceHandle& s, const Dist& d) {
    Value acc = d.support[0].first;
    for (std::size_t i = 1; i < d.support.size(); ++i) {
      acc = cc(s, d.support[i].second, acc, d.support[i].first);
    }
    return acc;
  };
  const Dist inner1 = two_point(q(0), q(4), Coeff(1, 2));
  const Dist inner2 = dist_unit(q(8));
  const Dist dd = two_point(Value::dist(inner1), Value::dist(inner2),
                            Coeff(1, 2));

  // Hand evaluation of the two paths under the broken map.
  CHECK(broken(space, dist_flatten(dd)) == q(11, 2));
  const Dist pushed = dist_map(
      [&](const Value& p) { return broken(space, p.dist_value()); }, dd);
  CHECK(broken(space, pushed) == q(5));

  const std::vector<Dist> nested = {dd};
  const auto report = check_algebra_laws(space, nested, broken);
  CHECK(!report.pass());
  bool hit = false;
  for (const auto& f : report.failures) {
    if (f.law == law::algebra_multiplication) hit = true;
  }
  CHECK(hit);
}

TEST_CASE("random distributions are valid and deterministic") {
  Rng r1(8), r2(8);
  const std::vector<Value> pool = {Value::token("a"), Value::token("b"),
                                   Value::token("c"), Value::token("d")};
  for (int i = 0; i < 40; ++i) {
    const Dist a = random_dist(r1, pool);
    const Dist b = random_dist(r2, pool);
    CHECK(Value::dist(a) == Value::dist(b));
    Rat total;
    for (const auto& [pt, w] : a.support) {
      total += w.value();
      CHECK(std::binary_search(pool.begin(), pool.end(), pt));
      CHECK(!w.is_zero());
    }
    CHECK(total == Rat(1));
  }
}
