#pragma once

#include <cstdint>
#include <random>

#include "cvx/coeff.hpp"

namespace cvx {

// Deterministic random source. Same seed, same platform or not, same
// stream: all derived draws go through next()/below() only, never
// through distribution classes whose output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish value in [0, n). Modulo bias is irrelevant here; what
  // matters is that the stream is reproducible everywhere.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // Random rational in [0, 1] with denominator at most max_den.
  Coeff coeff(long max_den = 12) {
    long den = range(1, max_den);
    long num = range(0, den);
    return Coeff(num, den);
  }

  // Random rational strictly inside (0, 1).
  Coeff coeff_interior(long max_den = 12) {
    long den = range(2, max_den);
    long num = range(1, den - 1);
    return Coeff(num, den);
  }

  Rat rat(long max_abs_num = 20, long max_den = 8) {
    return Rat(range(-max_abs_num, max_abs_num), range(1, max_den));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace cvx
