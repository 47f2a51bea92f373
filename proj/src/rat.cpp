#include "cvx/rat.hpp"

#include <cctype>
#include <ostream>

namespace cvx {

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw DomainError("division by zero");
  return Rat(mpq_class(q_ / o.q_));
}

Rat Rat::parse(const std::string& text) {
  auto fail = [&] { throw ValidationError("not a rational: '" + text + "'"); };
  if (text.empty()) fail();
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (text[i] == '-') ++i;
  std::size_t end_num = digits(i);
  if (end_num == i) fail();
  if (end_num < text.size()) {
    if (text[end_num] != '/') fail();
    std::size_t end_den = digits(end_num + 1);
    if (end_den != text.size() || end_den == end_num + 1) fail();
    if (text.substr(end_num + 1) == std::string(end_den - end_num - 1, '0')) {
      throw ValidationError("zero denominator in '" + text + "'");
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) fail();
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace cvx
