#include "cvx/geometric.hpp"

#include <algorithm>

#include "cvx/errors.hpp"
#include "cvx/serialize.hpp"

namespace cvx {

namespace {

std::vector<Rat> mix_coords(const Coeff& lambda, const std::vector<Rat>& x,
                            const std::vector<Rat>& y) {
  std::vector<Rat> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(lambda.value() * x[i] + lambda.bar().value() * y[i]);
  }
  return out;
}

class VectorSpace final : public ConvexSpace {
public:
  explicit VectorSpace(std::size_t dim)
      : ConvexSpace("vector(" + std::to_string(dim) + ")"), dim_(dim) {}

  bool contains(const Value& v) const override {
    return v.is(Value::Kind::Vec) && v.vec_coords().size() == dim_;
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    return Value::vec(mix_coords(lambda, x.vec_coords(), y.vec_coords()));
  }

  Value sample(Rng& rng) const override {
    std::vector<Rat> coords;
    coords.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) coords.push_back(rng.rat(12, 6));
    return Value::vec(std::move(coords));
  }

private:
  std::size_t dim_;
};

class SimplexSpace final : public ConvexSpace {
public:
  explicit SimplexSpace(std::size_t vertices)
      : ConvexSpace("simplex(" + std::to_string(vertices) + ")"),
        vertices_(vertices) {}

  bool contains(const Value& v) const override {
    if (!v.is(Value::Kind::Vec) || v.vec_coords().size() != vertices_) {
      return false;
    }
    Rat sum(0);
    for (const auto& c : v.vec_coords()) {
      if (c.sign() < 0) return false;
      sum += c;
    }
    return sum == Rat(1);
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    return Value::vec(mix_coords(lambda, x.vec_coords(), y.vec_coords()));
  }

  Value sample(Rng& rng) const override {
    std::vector<long> parts(vertices_);
    long total = 0;
    for (auto& p : parts) {
      p = rng.range(0, 6);
      total += p;
    }
    if (total == 0) {
      parts[std::size_t(rng.below(vertices_))] = 1;
      total = 1;
    }
    std::vector<Rat> coords;
    coords.reserve(vertices_);
    for (long p : parts) coords.push_back(Rat(p, total));
    return Value::vec(std::move(coords));
  }

private:
  std::size_t vertices_;
};

class UnitIntervalSpace final : public ConvexSpace {
public:
  UnitIntervalSpace() : ConvexSpace("unit-interval") {}

  bool contains(const Value& v) const override {
    if (!v.is(Value::Kind::Vec) || v.vec_coords().size() != 1) return false;
    const Rat& t = v.vec_coords()[0];
    return t >= Rat(0) && t <= Rat(1);
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    return Value::vec(mix_coords(lambda, x.vec_coords(), y.vec_coords()));
  }

  Value sample(Rng& rng) const override {
    return Value::vec({rng.coeff(10).value()});
  }
};

class IntervalSpace final : public ConvexSpace {
public:
  IntervalSpace() : ConvexSpace("intervals") {}

  bool contains(const Value& v) const override {
    return v.is(Value::Kind::Interval);
  }

  Value combine(const Coeff& lambda, const Value& x,
                const Value& y) const override {
    return Value::interval(
        interval_mix(lambda, x.interval_value(), y.interval_value()));
  }

  Value sample(Rng& rng) const override {
    Rat lo = rng.rat(8, 4);
    Rat width = rng.coeff(4).value() + Rat(rng.range(0, 3));
    Rat hi = lo + width;
    bool lc = rng.chance(1, 2);
    bool hc = rng.chance(1, 2);
    if (lo == hi) lc = hc = true;
    return Value::interval(interval_make(lo, hi, lc, hc));
  }
};

}  // namespace

SpaceHandle vector_space(std::size_t dim) {
  return std::make_shared<VectorSpace>(dim);
}

SpaceHandle simplex_space(std::size_t vertices) {
  if (vertices == 0) throw ValidationError("simplex needs at least one vertex");
  return std::make_shared<SimplexSpace>(vertices);
}

SpaceHandle unit_interval_space() {
  return std::make_shared<UnitIntervalSpace>();
}

Value segment(const SpaceHandle& space, const Value& x, const Value& y,
              const Coeff& lambda) {
  return cc(space, lambda.bar(), x, y);
}

Interval interval_mix(const Coeff& lambda, const Interval& i1,
                      const Interval& i2) {
  if (lambda.is_zero()) return i2;
  if (lambda.is_one()) return i1;
  const Rat& l = lambda.value();
  const Rat lb = lambda.bar().value();
  return interval_make(l * i1.lo + lb * i2.lo, l * i1.hi + lb * i2.hi,
                       i1.lo_closed && i2.lo_closed,
                       i1.hi_closed && i2.hi_closed);
}

SpaceHandle interval_space() { return std::make_shared<IntervalSpace>(); }

bool rational_feasible(const std::vector<std::vector<Rat>>& a,
                       const std::vector<Rat>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DomainError("right-hand side length mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("ragged constraint matrix");
  }
  if (m == 0) return true;

  // Phase-one tableau: n structural columns, m artificial columns, one
  // right-hand column. Artificials start basic; feasibility holds iff
  // their sum can be driven to zero.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = Rat(1);
    t[i][cols - 1] = flip ? -b[i] : b[i];
  }
  // Objective row: minimize the artificial sum, expressed over the
  // current basis by subtracting every constraint row.
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
    if (j >= n && j < n + m) t[m][j] += Rat(1);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland's rule: the lowest-index improving column.
    std::size_t pivot_col = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j].sign() < 0) {
        pivot_col = j;
        break;
      }
    }
    if (pivot_col == cols) break;
    std::size_t pivot_row = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][pivot_col].sign() <= 0) continue;
      if (pivot_row == m) {
        pivot_row = i;
        continue;
      }
      const Rat cur = t[i][cols - 1] / t[i][pivot_col];
      const Rat best = t[pivot_row][cols - 1] / t[pivot_row][pivot_col];
      if (cur < best || (cur == best && basis[i] < basis[pivot_row])) {
        pivot_row = i;
      }
    }
    if (pivot_row == m) {
      throw DomainError("unbounded phase-one objective");
    }
    const Rat p = t[pivot_row][pivot_col];
    for (auto& entry : t[pivot_row]) entry = entry / p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pivot_row || t[i][pivot_col].is_zero()) continue;
      const Rat factor = t[i][pivot_col];
      for (std::size_t j = 0; j < cols; ++j) {
        t[i][j] -= factor * t[pivot_row][j];
      }
    }
    basis[pivot_row] = pivot_col;
  }
  // Optimal value of the artificial sum is -t[m][last].
  return t[m][cols - 1].is_zero();
}

bool permutohedron_contains(const SpectrumSpec& spec) {
  const std::size_t n = spec.eigenvalues.size();
  if (spec.diagonal.size() != n) {
    throw DomainError("eigenvalue and diagonal lengths differ");
  }
  if (n == 0) throw DomainError("empty spectrum");
  if (n > 5) throw DomainError("unsupported size: length capped at 5");
  std::vector<Rat> perm = spec.eigenvalues;
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<Rat>> vertices;
  do {
    vertices.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Weights over vertices: convexity row of ones, one row per coordinate.
  std::vector<std::vector<Rat>> a(n + 1,
                                  std::vector<Rat>(vertices.size(), Rat(0)));
  std::vector<Rat> b(n + 1, Rat(0));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    a[0][v] = Rat(1);
    for (std::size_t i = 0; i < n; ++i) a[i + 1][v] = vertices[v][i];
  }
  b[0] = Rat(1);
  for (std::size_t i = 0; i < n; ++i) b[i + 1] = spec.diagonal[i];
  return rational_feasible(a, b);
}

LawReport check_unit_interval_functionals(const SpaceHandle& space,
                                          std::uint64_t seed, long cases) {
  if (cases <= 0) throw DomainError("case count must be positive");
  Rng rng(seed);
  LawReport rep;
  for (long i = 0; i < cases; ++i) {
    const Rat y0 = rng.coeff(10).value();
    const Rat y1 = rng.coeff(10).value();
    auto f = [&](const Value& v) {
      const Rat& tval = v.vec_coords()[0];
      return Value::vec({(Rat(1) - tval) * y0 + tval * y1});
    };
    std::vector<Value> samples;
    for (int j = 0; j < 4; ++j) samples.push_back(space->sample(rng));
    const std::vector<Coeff> lambdas = {Coeff(0, 1), Coeff(1, 1),
                                        rng.coeff_interior(10),
                                        rng.coeff_interior(10)};
    LawReport one = check_convex_map(f, space, space, samples, lambdas);
    // Tag the functional into each failure so the case stays re-runnable.
    for (auto& fail : one.failures) {
      nlohmann::json j = json_parse(fail.case_json);
      j["y0"] = y0.str();
      j["y1"] = y1.str();
      fail.case_json = j.dump();
    }
    rep.merge(std::move(one));
  }
  return rep;
}

}  // namespace cvx
