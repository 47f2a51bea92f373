#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>

namespace cvx::apps {

using Amplitude = std::complex<double>;
using State = std::array<Amplitude, 2>;

// Two pure qubit states; construction rejects non-unit vectors
// (norm off by more than 1e-12).
struct QubitPair {
  State psi1;
  State psi2;

  static QubitPair make(const State& psi1, const State& psi2);
};

// Pair with |psi1> = (1, 0) and |psi2> at Bloch angle alpha from it.
QubitPair qubit_pair_from_angle(double alpha);

// sqrt(1 - |<psi1|psi2>|^2), computed directly.
double fidelity_defect(const QubitPair& q);

// The same quantity recovered variationally: the largest separation
// |f(rho1) - f(rho2)| over affine functionals f(rho) = 1/2 + v . b(rho)
// with |v| <= 1/2, where b is the Bloch vector in the span of the two
// states. The direction v is searched over a spherical grid with
// grid_steps^2 points (grid_steps >= 100). Linearly dependent states
// separate under no functional at all, so they return exactly 0.
double fidelity_defect_search(const QubitPair& q, std::size_t grid_steps);

// Parses "a+bi,c+di" (imaginary part optional) into a state vector.
State parse_state(const std::string& text);

}  // namespace cvx::apps
