#include "cvx/apps/friction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cvx/errors.hpp"

namespace cvx::apps {

namespace {

double midpoint(std::size_t i, std::size_t n) {
  return (static_cast<double>(i) + 0.5) / static_cast<double>(n);
}

// Pushes the torque to zero by spending slack cell by cell, largest
// lever arms first. Returns false when the profile has no room left.
bool cancel_torque(std::vector<double>& f) {
  const std::size_t n = f.size();
  const double dx = 1.0 / static_cast<double>(n);
  for (int pass = 0; pass < 2; ++pass) {
    double torque = friction_torque(f);
    for (std::size_t j = n; j-- > 0;) {
      if (std::abs(torque) <= 1e-15) return true;
      const double x = midpoint(j, n);
      const double delta =
          std::clamp(-torque / (x * dx), -1.0 - f[j], 1.0 - f[j]);
      f[j] += delta;
      torque += delta * x * dx;
    }
  }
  return std::abs(friction_torque(f)) <= 1e-15;
}

}  // namespace

double friction_objective(const std::vector<double>& profile) {
  const double dx = 1.0 / static_cast<double>(profile.size());
  double total = 0.0;
  for (double v : profile) total += v * dx;
  return total;
}

double friction_torque(const std::vector<double>& profile) {
  const std::size_t n = profile.size();
  const double dx = 1.0 / static_cast<double>(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += midpoint(i, n) * profile[i] * dx;
  }
  return total;
}

FrictionSolution friction_solve(std::size_t cells) {
  if (cells < 10) throw DomainError("friction_solve needs at least 10 cells");
  const std::size_t n = cells;

  // With +1 on cells below k and -1 above, the fractional value that
  // zeroes the torque is (sum_{i>k} x_i - sum_{i<k} x_i) / x_k; the
  // switch cell is the unique k where that lands in [-1, 1].
  std::vector<double> above(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    above[i] = above[i + 1] + midpoint(i, n);
  }
  double below = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = midpoint(k, n);
    const double frac = (above[k + 1] - below) / x;
    if (frac >= -1.0 && frac <= 1.0) {
      FrictionSolution sol;
      sol.profile.assign(n, -1.0);
      std::fill(sol.profile.begin(), sol.profile.begin() + k, 1.0);
      sol.profile[k] = frac;
      sol.max_force = friction_objective(sol.profile);
      sol.switch_point =
          (static_cast<double>(k) + (1.0 + frac) / 2.0) / static_cast<double>(n);
      return sol;
    }
    below += x;
  }
  throw DomainError("friction_solve found no balancing cell");
}

std::vector<double> random_feasible_profile(std::size_t cells,
                                            std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::size_t n = cells;
  auto unit = [&gen] {
    return static_cast<double>(gen()) / 18446744073709551616.0;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> f(n);
    switch ((seed + static_cast<std::uint64_t>(attempt)) % 3) {
      case 0:
        for (auto& v : f) v = 2.0 * unit() - 1.0;
        break;
      case 1: {
        const double slope = 0.5 + unit();
        for (std::size_t i = 0; i < n; ++i) {
          f[i] = std::clamp(1.0 - slope * midpoint(i, n) - 0.4 * unit(), -1.0,
                            1.0);
        }
        break;
      }
      default: {
        const auto opt = friction_solve(n);
        for (std::size_t i = 0; i < n; ++i) {
          f[i] = std::clamp(opt.profile[i] + (unit() - 0.5), -1.0, 1.0);
        }
        break;
      }
    }
    if (cancel_torque(f)) return f;
  }
  throw DomainError("random_feasible_profile failed to balance torque");
}

}  // namespace cvx::apps
