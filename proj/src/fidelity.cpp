#include "cvx/apps/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "cvx/errors.hpp"

namespace cvx::apps {

namespace {

double norm2(const State& s) {
  return std::norm(s[0]) + std::norm(s[1]);
}

Amplitude overlap(const State& a, const State& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

std::array<double, 3> bloch(const Amplitude& a, const Amplitude& b) {
  const Amplitude cross = std::conj(a) * b;
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(a) - std::norm(b)};
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("not a number: " + text);
  }
  if (used != text.size()) {
    throw ValidationError("trailing characters in number: " + text);
  }
  return v;
}

Amplitude parse_amplitude(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw ValidationError("empty amplitude");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  text.pop_back();
  if (text.empty() || text == "+") return {0.0, 1.0};
  if (text == "-") return {0.0, -1.0};
  // Split at the last sign that starts the imaginary part, skipping
  // exponent signs and a leading sign.
  for (std::size_t pos = text.size(); pos-- > 1;) {
    if (text[pos] != '+' && text[pos] != '-') continue;
    const char prev = text[pos - 1];
    if (prev == 'e' || prev == 'E') continue;
    std::string imag = text.substr(pos);
    if (imag == "+") imag = "1";
    if (imag == "-") imag = "-1";
    return {parse_real(text.substr(0, pos)), parse_real(imag)};
  }
  return {0.0, parse_real(text)};
}

}  // namespace

QubitPair QubitPair::make(const State& psi1, const State& psi2) {
  for (const State* s : {&psi1, &psi2}) {
    if (std::abs(std::sqrt(norm2(*s)) - 1.0) > 1e-12) {
      throw ValidationError("state is not unit norm");
    }
  }
  return QubitPair{psi1, psi2};
}

QubitPair qubit_pair_from_angle(double alpha) {
  const State up = {Amplitude(1.0, 0.0), Amplitude(0.0, 0.0)};
  const State tilted = {Amplitude(std::cos(alpha / 2.0), 0.0),
                        Amplitude(std::sin(alpha / 2.0), 0.0)};
  return QubitPair::make(up, tilted);
}

double fidelity_defect(const QubitPair& q) {
  const double p = std::norm(overlap(q.psi1, q.psi2));
  return std::sqrt(std::max(0.0, 1.0 - p));
}

double fidelity_defect_search(const QubitPair& q, std::size_t grid_steps) {
  if (grid_steps < 100) {
    throw DomainError("fidelity_defect_search needs at least 100 grid steps");
  }
  // Work in the span of the two states: e1 = psi1, e2 the normalized
  // residual of psi2. In those coordinates psi1 = (1, 0) and
  // psi2 = (c, s) with s real.
  const Amplitude c = overlap(q.psi1, q.psi2);
  State residual = {q.psi2[0] - c * q.psi1[0], q.psi2[1] - c * q.psi1[1]};
  const double s = std::sqrt(norm2(residual));
  if (s < 1e-9) return 0.0;

  const auto b1 = bloch(Amplitude(1.0, 0.0), Amplitude(0.0, 0.0));
  const auto b2 = bloch(c, Amplitude(s, 0.0));
  const std::array<double, 3> diff = {b1[0] - b2[0], b1[1] - b2[1],
                                      b1[2] - b2[2]};

  // Fibonacci sphere of grid_steps^2 directions for v / |v|.
  const std::size_t count = grid_steps * grid_steps;
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  double best = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double z =
        1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi =
        2.0 * M_PI * static_cast<double>(k) / golden;
    const std::array<double, 3> u = {r * std::cos(phi), r * std::sin(phi), z};
    const double sep =
        std::abs(u[0] * diff[0] + u[1] * diff[1] + u[2] * diff[2]) / 2.0;
    best = std::max(best, sep);
  }
  return best;
}

State parse_state(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ValidationError("state needs two comma-separated amplitudes");
  }
  if (text.find(',', comma + 1) != std::string::npos) {
    throw ValidationError("state needs exactly two amplitudes");
  }
  return {parse_amplitude(text.substr(0, comma)),
          parse_amplitude(text.substr(comma + 1))};
}

}  // namespace cvx::apps
