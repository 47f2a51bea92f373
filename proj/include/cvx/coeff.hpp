#pragma once

#include <string>

#include "cvx/rat.hpp"

namespace cvx {

// Combination coefficient: an exact rational confined to [0, 1].
// Construction outside that range is a validation error, so a Coeff in
// hand is always a legal mixing weight.
class Coeff {
public:
  Coeff() : v_(0) {}
  Coeff(long num, long den) : Coeff(Rat(num, den)) {}
  explicit Coeff(const Rat& v) : v_(v) {
    if (v < Rat(0) || v > Rat(1)) {
      throw ValidationError("coefficient " + v.str() + " outside [0,1]");
    }
  }

  static Coeff parse(const std::string& text) { return Coeff(Rat::parse(text)); }

  const Rat& value() const { return v_; }

  // The complement 1 - a.
  Coeff bar() const {
    Coeff c;
    c.v_ = Rat(1) - v_;
    return c;
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == Rat(1); }
  bool interior() const { return !is_zero() && !is_one(); }

  Coeff operator*(const Coeff& o) const {
    Coeff c;
    c.v_ = v_ * o.v_;
    return c;
  }

  bool operator==(const Coeff& o) const { return v_ == o.v_; }
  bool operator!=(const Coeff& o) const { return v_ != o.v_; }
  bool operator<(const Coeff& o) const { return v_ < o.v_; }

  std::string str() const { return v_.str(); }

private:
  Rat v_;
};

}  // namespace cvx
