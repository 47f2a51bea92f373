#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cvx::apps {

// Discretized profile for a flat rod on [0, 1]: cell i covers
// [i/N, (i+1)/N] and holds the force density there, constrained to
// [-1, +1]. The torque about the origin must vanish.
struct FrictionSolution {
  double max_force = 0.0;
  double switch_point = 0.0;
  std::vector<double> profile;
};

double friction_objective(const std::vector<double>& profile);
double friction_torque(const std::vector<double>& profile);

// Maximizes total force subject to zero torque. The optimum is
// bang-bang with a single switch: +1 below the switch point, -1 above,
// and one fractional cell zeroing the torque exactly in the discrete
// model. Requires at least 10 cells.
FrictionSolution friction_solve(std::size_t cells);

// A random profile in [-1, 1]^N with (numerically) zero torque, for
// cross-checking optimality. Draws alternate between flat noise,
// one-sided bias, and perturbations of the bang-bang shape.
std::vector<double> random_feasible_profile(std::size_t cells,
                                            std::uint64_t seed);

}  // namespace cvx::apps
