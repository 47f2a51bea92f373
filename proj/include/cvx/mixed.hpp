#pragma once

#include <functional>
#include <map>

#include "cvx/semilattice.hpp"
#include "cvx/space.hpp"

namespace cvx {

// A transport map between fibers, keyed by the covering pair it serves.
using Transport = std::function<Value(const Value&)>;

// Fibered element: base point s paired with a member of the fiber over s.
Value fibered_element(const Value& base_point, const Value& fiber_value);
const Value& fibered_base(const Value& v);
const Value& fibered_value(const Value& v);

// The semidirect construction: a semilattice base, one convex space per
// base element, and a transport into the lower fiber for every covering
// pair (lower index, upper index). Interior combinations meet in the
// base, transport both fiber values down, and mix there; coefficient
// endpoints return their argument verbatim.
//
// Construction validates, on deterministically sampled fiber elements,
// that every transport is a convex map and that composite transports
// agree along every path (functoriality); violations name the offending
// triple.
SpaceHandle fibered_space_make(
    FiniteSemilattice base, std::vector<SpaceHandle> fibers,
    const std::map<std::pair<std::size_t, std::size_t>, Transport>&
        transports);

// The original space plus an absorbing point at infinity.
SpaceHandle adjoin_infinity(const SpaceHandle& inner);
Value infinity_value();

// The two-point space {i, f}: every interior coefficient lands on i.
SpaceHandle face_classifier();

// Stakes in [0, 1) and prize distributions over the tokens a and b.
// Mixing a stake with a prize collapses the prize to certainty:
// the result is the stake lambda p + (1 - lambda).
SpaceHandle lottery_space();
Value lottery_stake(const Rat& p);
Value lottery_prize(const Dist& d);

}  // namespace cvx
