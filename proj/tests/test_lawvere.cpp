#include <doctest.h>

#include <vector>

#include "cvx/dist_ops.hpp"
#include "cvx/errors.hpp"
#include "cvx/geometric.hpp"
#include "cvx/lawvere.hpp"
#include "support/oracles.hpp"

using namespace cvx;

namespace {

Value q2(long a, long b) { return Value::vec({Rat(a), Rat(b)}); }

std::vector<Value> sample_tuple(const SpaceHandle& space, Rng& rng,
                                std::size_t n) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(space->sample(rng));
  return out;
}

}  // namespace

TEST_CASE("stochastic matrices validate their columns") {
  CHECK_NOTHROW(sto_make(2, 2, {Rat(1, 2), Rat(1), Rat(1, 2), Rat(0)}));
  CHECK_THROWS_AS(sto_make(2, 2, {Rat(1, 2), Rat(1), Rat(1, 3), Rat(0)}),
                  ValidationError);
  CHECK_THROWS_AS(sto_make(2, 1, {Rat(3, 2), Rat(-1, 2)}), ValidationError);
  CHECK_THROWS_AS(sto_make(2, 2, {Rat(1), Rat(0)}), ValidationError);
  CHECK_THROWS_AS(sto_make(0, 1, {}), ValidationError);
  CHECK_NOTHROW(sto_make(1, 0, {}));

  const StoMatrix id = sto_identity(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(id.at(i, k) == (i == k ? Coeff(1, 1) : Coeff(0, 1)));
    }
  }
}

TEST_CASE("generators act as advertised") {
  const auto space = vector_space(2);
  const std::vector<Value> xy = {q2(2, 0), q2(0, 4)};

  const auto mixed = L_apply(space, c_lambda(Coeff(1, 4)), xy);
  REQUIRE(mixed.size() == 1);
  // 1/4 of (2,0) plus 3/4 of (0,4) is (1/2,3).
  CHECK(mixed[0] == Value::vec({Rat(1, 2), Rat(3)}));

  const std::vector<Value> just_x = {q2(5, 7)};
  const auto copied = L_apply(space, copy_e(), just_x);
  REQUIRE(copied.size() == 2);
  CHECK(copied[0] == just_x[0]);
  CHECK(copied[1] == just_x[0]);

  const auto swapped = L_apply(space, swap_s(), xy);
  REQUIRE(swapped.size() == 2);
  CHECK(swapped[0] == xy[1]);
  CHECK(swapped[1] == xy[0]);

  const auto dropped = L_apply(space, delete_d(), just_x);
  CHECK(dropped.empty());

  CHECK_THROWS_AS(L_apply(space, copy_e(), xy), DomainError);
}

TEST_CASE("evaluation matches the plain weighted sum") {
  const auto space = vector_space(2);
  Rng rng(41);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng.below(4);
    const std::size_t m = rng.below(4);
    const StoMatrix a = random_stochastic(rng, n, m);
    const auto xs = sample_tuple(space, rng, n);
    const auto got = L_apply(space, a, xs);
    REQUIRE(got.size() == m);
    for (std::size_t k = 0; k < m; ++k) {
      CHECK(got[k] == oracle::column_mix(a, xs, k));
    }
  }
}

TEST_CASE("composition evaluates contravariantly") {
  const auto space = vector_space(1);
  // b: 2 -> 3 inputs read backwards; a: 3 -> 1.
  const StoMatrix b = sto_make(
      2, 3, {Rat(1), Rat(1, 2), Rat(0), Rat(0), Rat(1, 2), Rat(1)});
  const StoMatrix a = sto_make(3, 1, {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  const StoMatrix ba = sto_compose(b, a);
  CHECK(ba.rows() == 2);
  CHECK(ba.cols() == 1);
  CHECK(ba.at(0, 0) == Coeff(1, 2));
  CHECK(ba.at(1, 0) == Coeff(1, 2));

  Rng rng(5);
  const auto xs = sample_tuple(space, rng, 2);
  const auto direct = L_apply(space, ba, xs);
  const auto staged = L_apply(space, a, L_apply(space, b, xs));
  REQUIRE(direct.size() == staged.size());
  CHECK(direct[0] == staged[0]);

  CHECK_THROWS_AS(sto_compose(a, b), DomainError);
}

TEST_CASE("function matrices pick out coordinates") {
  const auto space = vector_space(1);
  Rng rng(6);
  const auto xs = sample_tuple(space, rng, 3);
  const std::vector<std::size_t> f = {2, 0, 2, 1};
  const auto got = L_apply(space, function_matrix(f, 3), xs);
  REQUIRE(got.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(got[k] == xs[f[k]]);
  const std::vector<std::size_t> bad = {3};
  CHECK_THROWS_AS(function_matrix(bad, 3), DomainError);
}

TEST_CASE("tensor is the block sum") {
  const StoMatrix a = c_lambda(Coeff(1, 3));
  const StoMatrix b = sto_identity(2);
  const StoMatrix t = sto_tensor(a, b);
  CHECK(t.rows() == 4);
  CHECK(t.cols() == 3);
  CHECK(t.at(0, 0) == Coeff(1, 3));
  CHECK(t.at(1, 0) == Coeff(2, 3));
  CHECK(t.at(2, 0) == Coeff(0, 1));
  CHECK(t.at(2, 1) == Coeff(1, 1));
  CHECK(t.at(3, 2) == Coeff(1, 1));

  const auto space = vector_space(1);
  Rng rng(9);
  const auto xs = sample_tuple(space, rng, 4);
  const auto joint = L_apply(space, t, xs);
  const auto left =
      L_apply(space, a, std::vector<Value>{xs[0], xs[1]});
  const auto right =
      L_apply(space, b, std::vector<Value>{xs[2], xs[3]});
  REQUIRE(joint.size() == left.size() + right.size());
  CHECK(joint[0] == left[0]);
  CHECK(joint[1] == right[0]);
  CHECK(joint[2] == right[1]);
}

TEST_CASE("functoriality batteries pass on honest spaces") {
  for (const auto& space :
       {vector_space(2), simplex_space(3),
        free_space({Value::token("a"), Value::token("b")})}) {
    const auto report = check_lawvere_functoriality(space, 4, 60, 13);
    CHECK(report.pass());
    CHECK(report.per_law.at(law::functor_composition) >= 60);
    CHECK(report.per_law.at(law::product_tensor) >= 60);
  }
}

TEST_CASE("the generator column recovers the binary operation") {
  const auto space = vector_space(1);
  Rng rng(23);
  const auto samples = sample_tuple(space, rng, 4);
  const auto report = check_correspondence_roundtrip(space, samples);
  CHECK(report.pass());
  CHECK(report.per_law.at(law::cc_roundtrip) > 0);
  CHECK(report.per_law.at(law::barycenter_roundtrip) > 0);
}

TEST_CASE("a single-column matrix carries any barycenter") {
  const auto space = vector_space(1);
  const std::vector<Value> xs = {Value::vec({Rat(0)}), Value::vec({Rat(2)}),
                                 Value::vec({Rat(7)})};
  const StoMatrix col = sto_make(3, 1, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
  const auto got = L_apply(space, col, xs);
  REQUIRE(got.size() == 1);
  const Dist d = dist_make({{xs[0], Coeff(1, 2)},
                            {xs[1], Coeff(1, 3)},
                            {xs[2], Coeff(1, 6)}});
  CHECK(got[0] == barycenter(space, d));
  CHECK(got[0] == Value::vec({Rat(11, 6)}));  // 0/2 + 2/3 + 7/6
}

TEST_CASE("roundtrip suites stay deterministic across spaces") {
  for (const auto& space : {vector_space(1), simplex_space(2)}) {
    const auto r1 = run_roundtrip_suite(space, 77, 120);
    const auto r2 = run_roundtrip_suite(space, 77, 120);
    CHECK(r1.pass());
    CHECK(r1.checked == r2.checked);
    CHECK(r1.per_law.at(law::cc_roundtrip) >= 120);
  }
}
