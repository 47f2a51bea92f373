#pragma once

#include <string>
#include <vector>

#include "cvx/space.hpp"

namespace cvx {

// Deliberately broken spaces for exercising the law engine. Each one
// passes every law except the one named in its constructor.

// Two tokens whose interior combination always returns the first
// argument: breaks parametric commutativity and nothing else.
SpaceHandle corrupt_commutativity_space();

// Three tokens under the cyclic "beats" table (a*b=c, b*c=a, a*c=b):
// idempotent and commutative but not associative, so the deformed
// associativity law fails.
SpaceHandle corrupt_associativity_space();

// Perturbations of the unit-interval structure. Each must be caught by
// the law suite or by the affine-functional check; together they witness
// that nonstandard structures on [0,1] do not survive the axioms.
SpaceHandle perturbed_interval_swap();        // reverses the two roles
SpaceHandle perturbed_interval_smoothstep();  // reparametrizes lambda
SpaceHandle perturbed_interval_meet();        // takes the minimum instead

// All shipped perturbations with their names.
std::vector<std::pair<std::string, SpaceHandle>> rigidity_perturbations();

// Fixture lookup by name for descriptors; unknown names are validation
// errors.
SpaceHandle fixture_space(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace cvx
