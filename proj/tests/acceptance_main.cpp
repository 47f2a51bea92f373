// Acceptance gate: runs the full battery once, prints one line per
// criterion, and exits nonzero when any of them fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvx/apps/fidelity.hpp"
#include "cvx/apps/friction.hpp"
#include "cvx/dist_ops.hpp"
#include "cvx/fixtures.hpp"
#include "cvx/geometric.hpp"
#include "cvx/laws.hpp"
#include "cvx/lawvere.hpp"
#include "cvx/mixed.hpp"
#include "cvx/semilattice.hpp"
#include "support/oracles.hpp"

using namespace cvx;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

void require_counts(const LawReport& rep, const std::vector<std::string>& laws,
                    long floor, const std::string& where) {
  require(rep.pass(), where + ": " + (rep.failures.empty()
                                          ? std::string("failed")
                                          : rep.failures.front().law +
                                                " case=" +
                                                rep.failures.front().case_json));
  for (const auto& name : laws) {
    const auto it = rep.per_law.find(name);
    require(it != rep.per_law.end() && it->second >= floor,
            where + ": " + name + " ran fewer than " +
                std::to_string(floor) + " cases");
  }
}

Value tok(const char* s) { return Value::token(s); }

FiniteSemilattice chain3() {
  return FiniteSemilattice::make({tok("bot"), tok("mid"), tok("top")},
                                 {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
}

FiniteSemilattice diamond() {
  return FiniteSemilattice::make(
      {tok("bot"), tok("a"), tok("b"), tok("top")},
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
}

Transport affine1(const Rat& scale, const Rat& shift) {
  return [scale, shift](const Value& v) {
    return Value::vec({scale * v.vec_coords()[0] + shift});
  };
}

SpaceHandle fibered_chain() {
  std::map<std::pair<std::size_t, std::size_t>, Transport> edges;
  edges[{0, 1}] = [](const Value& v) {
    const auto& c = v.vec_coords();
    return Value::vec({(c[0] + c[1]) / Rat(2)});
  };
  return fibered_space_make(
      FiniteSemilattice::make({tok("lo"), tok("hi")}, {{0, 0}, {0, 1}}),
      {vector_space(1), vector_space(2)}, edges);
}

SpaceHandle fibered_diamond() {
  std::map<std::pair<std::size_t, std::size_t>, Transport> edges;
  edges[{0, 1}] = affine1(Rat(2), Rat(0));
  edges[{0, 2}] = affine1(Rat(2), Rat(1));
  edges[{1, 3}] = affine1(Rat(1), Rat(1));
  edges[{2, 3}] = affine1(Rat(1), Rat(1, 2));
  // Functorial: 2(v+1) = 2v+2 along a, 2(v+1/2)+1 = 2v+2 along b.
  return fibered_space_make(diamond(),
                            {vector_space(1), vector_space(1),
                             vector_space(1), vector_space(1)},
                            edges);
}

std::string criterion_law_suite() {
  const std::vector<std::pair<std::string, SpaceHandle>> spaces = {
      {"vector-0", vector_space(0)},
      {"vector-1", vector_space(1)},
      {"vector-2", vector_space(2)},
      {"vector-3", vector_space(3)},
      {"free-2", free_space({tok("a"), tok("b")})},
      {"free-6", free_space({tok("a"), tok("b"), tok("c"), tok("d"),
                             tok("e"), tok("f")})},
      {"face-classifier", face_classifier()},
      {"divisor-12", semilattice_space(divisor_semilattice(12))},
      {"chain-3", semilattice_space(chain3())},
      {"diamond", semilattice_space(diamond())},
      {"fibered-chain", fibered_chain()},
      {"fibered-diamond", fibered_diamond()},
      {"adjoin-infinity", adjoin_infinity(vector_space(1))},
      {"lottery", lottery_space()},
      {"intervals", interval_space()},
  };
  for (const auto& [name, space] : spaces) {
    const auto rep = run_law_suite(space, 2026, 500);
    require_counts(rep, {law::unit, law::commutativity, law::associativity},
                   500, name);
  }

  const auto corrupt =
      run_law_suite(fixture_space("corrupt-commutativity"), 2026, 200);
  require(!corrupt.pass(), "corrupt fixture sailed through the law suite");
  for (const auto& f : corrupt.failures) {
    require(f.law == law::commutativity,
            "corrupt fixture blamed the wrong law: " + f.law);
  }

  std::ostringstream out;
  out << spaces.size() << " space kinds x 500 cases; corrupt fixture blamed "
      << law::commutativity;
  return out.str();
}

std::string criterion_monad_laws() {
  const auto rep = run_coefficient_change_suite(2026, 220);
  require_counts(rep,
                 {law::giry_left_unit, law::giry_right_unit,
                  law::giry_associativity, law::manes_left_unit,
                  law::manes_right_unit, law::manes_associativity,
                  law::change_unit, law::change_flatten},
                 200, "coefficient-change suite");
  std::ostringstream out;
  out << rep.checked << " checks across both monads and the change squares";
  return out.str();
}

std::string criterion_lawvere() {
  const std::vector<std::pair<std::string, SpaceHandle>> spaces = {
      {"vector-2", vector_space(2)},
      {"simplex-3", simplex_space(3)},
      {"free-3", free_space({tok("x"), tok("y"), tok("z")})},
      {"diamond", semilattice_space(diamond())},
  };
  long total = 0;
  for (const auto& [name, space] : spaces) {
    const auto rep = check_lawvere_functoriality(space, 4, 210, 2026);
    require_counts(rep,
                   {law::functor_identity, law::functor_composition,
                    law::product_projection, law::product_tensor,
                    law::product_terminal},
                   200, name);
    total += rep.checked;
  }

  const auto big = run_roundtrip_suite(vector_space(2), 2026, 20000);
  require_counts(big, {law::cc_roundtrip, law::barycenter_roundtrip}, 200,
                 "roundtrip vector-2");
  total += big.checked;
  for (const auto& [name, space] :
       std::vector<std::pair<std::string, SpaceHandle>>{
           {"simplex-3", simplex_space(3)},
           {"free-2", free_space({tok("a"), tok("b")})}}) {
    const auto rep = run_roundtrip_suite(space, 2027, 2000);
    require(rep.pass(), "roundtrip " + name + " failed");
    total += rep.checked;
  }

  std::ostringstream out;
  out << total << " functoriality, product, and roundtrip checks";
  return out.str();
}

std::string criterion_friction() {
  const double sqrt2 = std::sqrt(2.0);
  const auto sol = apps::friction_solve(10000);
  require(std::abs(sol.max_force - (sqrt2 - 1.0)) < 1e-3,
          "max force off the closed form");
  require(std::abs(sol.switch_point - 1.0 / sqrt2) < 1e-3,
          "switch point off the closed form");
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto p = apps::random_feasible_profile(10000, seed);
    require(apps::friction_objective(p) <= sol.max_force + 1e-9,
            "random profile beat the solver at seed " + std::to_string(seed));
  }
  std::ostringstream out;
  out.precision(9);
  out << std::fixed << "F=" << sol.max_force << " s=" << sol.switch_point
      << "; 500 feasible profiles stayed below";
  return out.str();
}

std::string criterion_fidelity() {
  std::mt19937_64 eng(20260819u);
  const auto uniform = [&] {
    return 2.0 * (double(eng() >> 11) * 0x1.0p-53) - 1.0;
  };
  const auto random_state = [&] {
    apps::State s;
    double norm = 0.0;
    do {
      s = {apps::Amplitude(uniform(), uniform()),
           apps::Amplitude(uniform(), uniform())};
      norm = std::sqrt(std::norm(s[0]) + std::norm(s[1]));
    } while (norm < 1e-3);
    s[0] /= norm;
    s[1] /= norm;
    return s;
  };

  double worst = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const auto q = apps::QubitPair::make(random_state(), random_state());
    const double direct = apps::fidelity_defect(q);
    const double found = apps::fidelity_defect_search(q, 100);
    require(found <= direct + 1e-12, "search exceeded the direct value");
    const double gap = direct - found;
    require(gap <= 1e-2,
            "search missed the defect by " + std::to_string(gap));
    if (gap > worst) worst = gap;
  }

  for (int i = 0; i < 3; ++i) {
    const auto psi = random_state();
    const auto phase = std::polar(1.0, uniform());
    const apps::State rotated = {psi[0] * phase, psi[1] * phase};
    const double found =
        apps::fidelity_defect_search(apps::QubitPair::make(psi, rotated), 100);
    require(found == 0.0, "degenerate pair returned a nonzero defect");
  }

  std::ostringstream out;
  out.precision(6);
  out << std::fixed << "20 pairs at 10000 directions, worst gap " << worst
      << "; degenerate pairs returned exactly 0";
  return out.str();
}

std::string criterion_interval_identity() {
  const Interval open{Rat(0), Rat(1), false, false};
  const Interval closed{Rat(0), Rat(1), true, true};
  const Interval mixed = interval_mix(Coeff(1, 2), open, closed);
  require(mixed.lo == Rat(0) && mixed.hi == Rat(1) && !mixed.lo_closed &&
              !mixed.hi_closed,
          "half open plus half closed did not return the open interval");

  const auto rep = run_law_suite(interval_space(), 2026, 500);
  require_counts(rep, {law::unit, law::associativity}, 500, "intervals");
  return "mix(1/2, (0,1), [0,1]) = (0,1) exactly; law suite passed";
}

std::string criterion_schur_horn() {
  Rng rng(777);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 3 + rng.below(2);
    SpectrumSpec spec;
    for (std::size_t i = 0; i < n; ++i) spec.eigenvalues.push_back(rng.rat(6, 4));
    Rat sum;
    for (const auto& e : spec.eigenvalues) sum += e;
    if (round % 2 == 0) {
      Rat lo = spec.eigenvalues[0];
      for (const auto& e : spec.eigenvalues) {
        if (e < lo) lo = e;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        spec.diagonal.push_back(lo);
        sum -= lo;
      }
      spec.diagonal.push_back(sum);
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        spec.diagonal.push_back(rng.rat(6, 4));
        sum -= spec.diagonal.back();
      }
      spec.diagonal.push_back(sum);
    }
    const bool member = permutohedron_contains(spec);
    const bool dominated = oracle::majorized(spec.diagonal, spec.eigenvalues);
    require(member == dominated,
            "hull membership and majorization disagreed at round " +
                std::to_string(round));
  }

  SpectrumSpec uniform;
  uniform.eigenvalues = {Rat(1), Rat(0), Rat(0)};
  uniform.diagonal = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  require(permutohedron_contains(uniform),
          "hull test rejected the uniform diagonal");
  require(oracle::majorized(uniform.diagonal, uniform.eigenvalues),
          "oracle rejected the uniform diagonal");
  return "200 instances agreed with the majorization oracle; "
         "uniform diagonal accepted";
}

std::string criterion_rigidity() {
  const auto perturbations = rigidity_perturbations();
  require(perturbations.size() >= 3,
          "fewer than 3 shipped perturbations");
  std::ostringstream out;
  for (const auto& [name, space] : perturbations) {
    const bool law_fail = !run_law_suite(space, 2026, 300).pass();
    const bool functional_fail =
        !check_unit_interval_functionals(space, 2026, 200).pass();
    require(law_fail || functional_fail,
            name + " survived both the law suite and the functional check");
    out << name << (law_fail ? " (laws) " : " (functionals) ");
  }
  return std::to_string(perturbations.size()) + " perturbations caught: " +
         out.str();
}

struct Criterion {
  const char* name;
  std::function<std::string()> body;
  double budget_seconds;  // 0 means no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> gates = {
      {"law-suite", criterion_law_suite, 60.0},
      {"monad-laws", criterion_monad_laws, 0.0},
      {"lawvere-correspondence", criterion_lawvere, 0.0},
      {"friction-optimum", criterion_friction, 5.0},
      {"fidelity-search", criterion_fidelity, 0.0},
      {"interval-identity", criterion_interval_identity, 0.0},
      {"schur-horn", criterion_schur_horn, 0.0},
      {"rigidity-falsification", criterion_rigidity, 0.0},
  };

  bool all_ok = true;
  for (const auto& gate : gates) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = gate.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && gate.budget_seconds > 0.0 && elapsed > gate.budget_seconds) {
      ok = false;
      detail = "over the time budget of " +
               std::to_string(gate.budget_seconds) + "s";
    }
    std::printf("%s %-24s %6.2fs  %s\n", ok ? "PASS" : "FAIL", gate.name,
                elapsed, detail.c_str());
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
