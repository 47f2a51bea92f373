#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "cvx/errors.hpp"

namespace cvx {

// Exact rational number, always held in canonical reduced form
// (denominator > 0, gcd(|num|, den) = 1). All arithmetic is exact;
// there is no implicit conversion from floating point anywhere.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: integers embed silently
  Rat(long num, long den);

  // Parses "p" or "p/q" in base 10. Rejects anything else.
  static Rat parse(const std::string& text);

  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  static int cmp(const Rat& a, const Rat& b) { return ::cmp(a.q_, b.q_); }

  bool operator==(const Rat& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Rat& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Rat& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const Rat& o) const { return cmp(*this, o) <= 0; }
  bool operator>(const Rat& o) const { return cmp(*this, o) > 0; }
  bool operator>=(const Rat& o) const { return cmp(*this, o) >= 0; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  double to_double() const { return q_.get_d(); }

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace cvx
