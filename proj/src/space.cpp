#include "cvx/space.hpp"

#include <algorithm>

#include "cvx/errors.hpp"

namespace cvx {

Value cc(const SpaceHandle& space, const Coeff& lambda, const Value& x,
         const Value& y) {
  if (!space->contains(x)) {
    throw DomainError(space->id() + ": " + x.str() + " is not a member");
  }
  if (!space->contains(y)) {
    throw DomainError(space->id() + ": " + y.str() + " is not a member");
  }
  return space->combine(lambda, x, y);
}

namespace {

struct Weighted {
  Rat weight;
  Value point;
};

// Left-to-right accumulation of the right fold with renormalization:
// after each step acc carries the combination of the prefix, weighted by
// the prefix sum. Zero weights were dropped by the caller, so every
// partial sum is positive and no renormalization ever divides by zero.
Value fold_nary(const ConvexSpace& space, const std::vector<Weighted>& items) {
  Value acc = items.front().point;
  Rat cum = items.front().weight;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const Rat prev = cum;
    cum += items[i].weight;
    acc = space.combine(Coeff(prev / cum), acc, items[i].point);
  }
  return acc;
}

std::vector<Weighted> gather(const SpaceHandle& space,
                             std::span<const Coeff> weights,
                             std::span<const Value> points) {
  if (weights.size() != points.size()) {
    throw ValidationError("weights and points differ in number");
  }
  if (weights.empty()) throw DomainError("empty combination");
  Rat total(0);
  for (const auto& w : weights) total += w.value();
  if (total != Rat(1)) {
    throw ValidationError("weights sum to " + total.str() + ", not 1");
  }
  std::vector<Weighted> items;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!space->contains(points[i])) {
      throw DomainError(space->id() + ": " + points[i].str() +
                        " is not a member");
    }
    if (!weights[i].is_zero()) {
      items.push_back({weights[i].value(), points[i]});
    }
  }
  return items;
}

void all_trees(const ConvexSpace& space, const std::vector<Weighted>& items,
               std::vector<Value>& out);

// Every unordered binary tree over items: the first item anchors the
// left subtree, the remaining ones are split across both sides in all
// 2^(n-1) - 1 ways that leave the right side nonempty.
void all_trees(const ConvexSpace& space, const std::vector<Weighted>& items,
               std::vector<Value>& out) {
  if (items.size() == 1) {
    out.push_back(items.front().point);
    return;
  }
  Rat total(0);
  for (const auto& it : items) total += it.weight;
  const std::size_t rest = items.size() - 1;
  for (std::uint64_t mask = 0; mask + 1 < (1ull << rest); ++mask) {
    std::vector<Weighted> left{items.front()};
    std::vector<Weighted> right;
    Rat left_weight = items.front().weight;
    for (std::size_t i = 0; i < rest; ++i) {
      if (mask & (1ull << i)) {
        left.push_back(items[i + 1]);
        left_weight += items[i + 1].weight;
      } else {
        right.push_back(items[i + 1]);
      }
    }
    std::vector<Value> lefts;
    std::vector<Value> rights;
    all_trees(space, left, lefts);
    all_trees(space, right, rights);
    const Coeff lam(left_weight / total);
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        out.push_back(space.combine(lam, l, r));
      }
    }
  }
}

}  // namespace

Value cc_nary(const SpaceHandle& space, std::span<const Coeff> weights,
              std::span<const Value> points) {
  return fold_nary(*space, gather(space, weights, points));
}

std::vector<Value> cc_all_bracketings(const SpaceHandle& space,
                                      std::span<const Coeff> weights,
                                      std::span<const Value> points) {
  auto items = gather(space, weights, points);
  if (items.size() > 6) {
    throw DomainError("bracketing enumeration capped at 6 points");
  }
  std::vector<Value> out;
  all_trees(*space, items, out);
  return out;
}

}  // namespace cvx
