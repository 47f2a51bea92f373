#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "cvx/dist_ops.hpp"
#include "cvx/lawvere.hpp"
#include "cvx/rat.hpp"
#include "cvx/value.hpp"

// Independent reference computations the tests compare the library
// against. Everything here is written directly from the defining
// formulas, on purpose, without going through the library's own
// operations.
namespace oracle {

// d is majorized by e: both sorted descending, every prefix sum of d at
// most the matching prefix sum of e, and the totals equal.
inline bool majorized(std::vector<cvx::Rat> d, std::vector<cvx::Rat> e) {
  if (d.size() != e.size()) return false;
  auto desc = [](const cvx::Rat& a, const cvx::Rat& b) { return b < a; };
  std::sort(d.begin(), d.end(), desc);
  std::sort(e.begin(), e.end(), desc);
  cvx::Rat pd, pe;
  for (std::size_t i = 0; i < d.size(); ++i) {
    pd = pd + d[i];
    pe = pe + e[i];
    if (i + 1 == d.size()) return pd == pe;
    if (pe < pd) return false;
  }
  return true;
}

// Flattens a distribution over distributions by plain weight
// multiplication into an exact point-to-mass map.
inline std::map<cvx::Value, cvx::Rat> flatten_weights(const cvx::Dist& dd) {
  std::map<cvx::Value, cvx::Rat> acc;
  for (const auto& [inner, w_outer] : dd.support) {
    for (const auto& [point, w_inner] : inner.dist_value().support) {
      acc[point] = acc[point] + w_outer.value() * w_inner.value();
    }
  }
  for (auto it = acc.begin(); it != acc.end();) {
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  }
  return acc;
}

// Column k of a stochastic matrix applied to rational-vector points:
// the plain weighted sum sum_i a(i, k) x_i, coordinate by coordinate.
inline cvx::Value column_mix(const cvx::StoMatrix& a,
                             const std::vector<cvx::Value>& xs,
                             std::size_t k) {
  const std::size_t dim = xs.at(0).vec_coords().size();
  std::vector<cvx::Rat> out(dim);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& coords = xs.at(i).vec_coords();
    for (std::size_t c = 0; c < dim; ++c) {
      out[c] = out[c] + a.at(i, k).value() * coords[c];
    }
  }
  return cvx::Value::vec(std::move(out));
}

}  // namespace oracle
