#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "cvx/laws.hpp"
#include "cvx/space.hpp"

namespace cvx {

namespace law {
inline constexpr const char* algebra_unit = "algebra-unit";
inline constexpr const char* algebra_multiplication = "algebra-multiplication";
}  // namespace law

// Canonicalizing constructor: merges repeated points, drops zero
// weights, sorts, and insists the weights sum to one.
Dist dist_make(std::vector<std::pair<Value, Coeff>> entries);

// The point mass at x.
Dist dist_unit(const Value& x);

// Pushforward along f; weights of colliding images are merged.
Dist dist_map(const std::function<Value(const Value&)>& f, const Dist& d);

// Multiplication of the monad: every point of dd must itself be a
// distribution value, and the weights multiply through.
Dist dist_flatten(const Dist& dd);

const Coeff& dist_weight(const Dist& d, const Value& x);  // zero if absent

// The free convex space on a finite carrier: formal mixtures with exact
// weights, mixed by weight interpolation. Elements are dist values whose
// support lies inside the carrier.
SpaceHandle free_space(std::vector<Value> carrier);

// Structure map of the algebra: the combination of the support weighted
// by the distribution. Every supported point must belong to the space.
Value barycenter(const SpaceHandle& space, const Dist& d);

using StructureMap = std::function<Value(const SpaceHandle&, const Dist&)>;

// Both algebra squares for the given structure map (barycenter when
// absent), evaluated on distributions over distributions.
LawReport check_algebra_laws(const SpaceHandle& space,
                             std::span<const Dist> nested,
                             const StructureMap& m = {});

// Randomized algebra suite over distributions built from sampled
// elements. Deterministic in seed.
LawReport run_algebra_suite(const SpaceHandle& space, std::uint64_t seed,
                            long cases);

// Random distribution over a nonempty subset of the given points.
Dist random_dist(Rng& rng, std::span<const Value> points);

}  // namespace cvx
