#pragma once

#include <cstdint>
#include <span>

#include "cvx/laws.hpp"
#include "cvx/space.hpp"

namespace cvx {

// Rational affine space of the given dimension; elements are vec values
// with exactly dim coordinates, mixed componentwise.
SpaceHandle vector_space(std::size_t dim);

// Barycentric-coordinate simplex on the given number of vertices:
// nonnegative coordinates summing to one.
SpaceHandle simplex_space(std::size_t vertices);

// vector_space(1) restricted to [0, 1].
SpaceHandle unit_interval_space();

// The unique convex path from x to y: lambda = 0 lands on x, 1 on y.
Value segment(const SpaceHandle& space, const Value& x, const Value& y,
              const Coeff& lambda);

// Pointwise mixture of intervals. Interior coefficients mix endpoints,
// and a resulting endpoint is closed exactly when both contributing
// endpoints are closed; the coefficient endpoints return their argument.
Interval interval_mix(const Coeff& lambda, const Interval& i1,
                      const Interval& i2);

// The convex space of rational intervals under interval_mix.
SpaceHandle interval_space();

// An eigenvalue vector and a candidate diagonal of the same length.
struct SpectrumSpec {
  std::vector<Rat> eigenvalues;
  std::vector<Rat> diagonal;
};

// Whether the diagonal lies in the convex hull of all coordinate
// permutations of the eigenvalues, decided by exact rational
// feasibility over the enumerated vertices. Lengths above 5 are refused.
bool permutohedron_contains(const SpectrumSpec& spec);

// Solvability of A x = b with x >= 0, decided exactly (phase-one simplex
// with Bland's rule). Exposed for reuse and direct testing.
bool rational_feasible(const std::vector<std::vector<Rat>>& a,
                       const std::vector<Rat>& b);

// The affine maps t -> (1-t) y0 + t y1 must be convex maps of the unit
// interval; a perturbed structure that survives the law suite is caught
// here instead. Reports under the convex-map law name.
LawReport check_unit_interval_functionals(const SpaceHandle& space,
                                          std::uint64_t seed, long cases);

}  // namespace cvx
