#pragma once

#include <memory>
#include <span>
#include <string>

#include "cvx/rng.hpp"
#include "cvx/value.hpp"

namespace cvx {

// A convex space: a carrier predicate plus one binary combination
// operation per coefficient. Implementations supply combine() assuming
// both arguments are members; the checked entry point is cc() below.
//
// equal() defaults to structural identity of values. Spaces whose
// elements have several representations override it.
class ConvexSpace {
public:
  virtual ~ConvexSpace() = default;

  const std::string& id() const { return id_; }

  virtual bool contains(const Value& v) const = 0;
  virtual Value combine(const Coeff& lambda, const Value& x,
                        const Value& y) const = 0;
  virtual bool equal(const Value& a, const Value& b) const { return a == b; }

  // Draws a member. Used by the law suites; every space must be able to
  // produce a spread of its own elements deterministically from rng.
  virtual Value sample(Rng& rng) const = 0;

protected:
  explicit ConvexSpace(std::string id) : id_(std::move(id)) {}

private:
  std::string id_;
};

using SpaceHandle = std::shared_ptr<const ConvexSpace>;

// Checked combination: rejects non-members with a domain error, then
// delegates to the space.
Value cc(const SpaceHandle& space, const Coeff& lambda, const Value& x,
         const Value& y);

// N-ary combination by right-fold with renormalization. Weights must sum
// to one and match the points in number; zero-weight terms are dropped
// before folding. A single surviving term is returned as is.
Value cc_nary(const SpaceHandle& space, std::span<const Coeff> weights,
              std::span<const Value> points);

// All ways to reduce n points to one element through nested binary
// combinations, one result per unordered bracketing tree. Used to verify
// that cc_nary is bracketing-independent. Grows as (2n-3)!!, so n is
// capped at 6.
std::vector<Value> cc_all_bracketings(const SpaceHandle& space,
                                      std::span<const Coeff> weights,
                                      std::span<const Value> points);

}  // namespace cvx
