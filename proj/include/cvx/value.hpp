#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cvx/coeff.hpp"

namespace cvx {

namespace detail {
struct ValueNode;
}

// Rational interval with independently open or closed endpoints.
// Degenerate intervals (lo == hi) must be closed on both sides.
struct Interval {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

Interval interval_make(const Rat& lo, const Rat& hi, bool lo_closed,
                       bool hi_closed);

class Value;

// Finitely supported distribution in canonical form: support sorted by
// point, points distinct, every weight nonzero, weights summing to one.
// Build one through dist_make; the invariants are assumed everywhere else.
struct Dist {
  std::vector<std::pair<Value, Coeff>> support;
};

// Immutable element of some convex space. One closed universe of shapes
// covers every space in the library: named tokens, exact scalars and
// vectors, intervals, distributions, finite sets, and tagged composites
// (used for fibered pairs, adjoined points, lottery stakes). Values are
// cheap to copy and carry a structural total order, so they can act as
// set members and distribution points themselves.
class Value {
public:
  enum class Kind { Token, Scalar, Vec, Interval, Dist, Set, Tagged };

  Value();  // the empty token; a placeholder, member of nothing useful

  static Value token(std::string name);
  static Value scalar(Rat r);
  static Value vec(std::vector<Rat> coords);
  static Value interval(Interval iv);
  static Value dist(Dist d);
  static Value set(std::vector<Value> members);  // sorts and dedupes
  static Value tagged(std::string tag, std::vector<Value> parts);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const std::string& token_name() const;
  const Rat& scalar_value() const;
  const std::vector<Rat>& vec_coords() const;
  const Interval& interval_value() const;
  const Dist& dist_value() const;
  const std::vector<Value>& set_members() const;
  const std::string& tag() const;
  const std::vector<Value>& tagged_parts() const;

  // Structural total order: kind first, then contents lexicographically.
  static int cmp(const Value& a, const Value& b);

  bool operator==(const Value& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Value& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Value& o) const { return cmp(*this, o) < 0; }

  // Compact deterministic rendering for reports and error messages.
  std::string str() const;

protected:
  explicit Value(std::shared_ptr<const detail::ValueNode> node)
      : node_(std::move(node)) {}

private:
  std::shared_ptr<const detail::ValueNode> node_;
};

namespace detail {

struct SetRep {
  std::vector<Value> members;
};

struct TaggedRep {
  std::string tag;
  std::vector<Value> parts;
};

struct ValueNode {
  // Alternative order must match Value::Kind.
  std::variant<std::string, Rat, std::vector<Rat>, Interval, Dist, SetRep,
               TaggedRep>
      data;
};

}  // namespace detail

int interval_cmp(const Interval& a, const Interval& b);

}  // namespace cvx
