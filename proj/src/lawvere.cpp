#include "cvx/lawvere.hpp"

#include <algorithm>
#include <cmath>

#include "cvx/dist_ops.hpp"
#include "cvx/errors.hpp"
#include "cvx/serialize.hpp"

namespace cvx {

using nlohmann::json;

StoMatrix sto_make(std::size_t rows, std::size_t cols,
                   std::vector<Rat> entries) {
  if (entries.size() != rows * cols) {
    throw ValidationError("matrix entry count mismatch");
  }
  if (cols > 0 && rows == 0) {
    throw ValidationError("no stochastic column fits zero rows");
  }
  std::vector<Coeff> grid;
  grid.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.sign() < 0) {
      throw ValidationError("negative entry " + e.str());
    }
    if (e > Rat(1)) {
      throw ValidationError("entry " + e.str() + " exceeds 1");
    }
    grid.emplace_back(e);
  }
  for (std::size_t k = 0; k < cols; ++k) {
    Rat sum(0);
    for (std::size_t i = 0; i < rows; ++i) sum += entries[i * cols + k];
    if (sum != Rat(1)) {
      throw ValidationError("column " + std::to_string(k) + " sums to " +
                            sum.str());
    }
  }
  return StoMatrix(rows, cols, std::move(grid));
}

StoMatrix sto_identity(std::size_t n) {
  std::vector<Rat> entries(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Rat(1);
  return sto_make(n, n, std::move(entries));
}

StoMatrix sto_compose(const StoMatrix& b, const StoMatrix& a) {
  if (b.cols() != a.rows()) {
    throw DomainError("composition dimension mismatch: " +
                      std::to_string(b.cols()) + " vs " +
                      std::to_string(a.rows()));
  }
  std::vector<Rat> entries(b.rows() * a.cols(), Rat(0));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Rat& bij = b.at(i, j).value();
      if (bij.is_zero()) continue;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        entries[i * a.cols() + k] += bij * a.at(j, k).value();
      }
    }
  }
  return sto_make(b.rows(), a.cols(), std::move(entries));
}

StoMatrix sto_tensor(const StoMatrix& a, const StoMatrix& b) {
  const std::size_t rows = a.rows() + b.rows();
  const std::size_t cols = a.cols() + b.cols();
  std::vector<Rat> entries(rows * cols, Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      entries[i * cols + k] = a.at(i, k).value();
    }
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      entries[(a.rows() + i) * cols + (a.cols() + k)] = b.at(i, k).value();
    }
  }
  return sto_make(rows, cols, std::move(entries));
}

StoMatrix c_lambda(const Coeff& lambda) {
  return sto_make(2, 1, {lambda.value(), lambda.bar().value()});
}

StoMatrix copy_e() { return sto_make(1, 2, {Rat(1), Rat(1)}); }

StoMatrix swap_s() {
  return sto_make(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)});
}

StoMatrix delete_d() { return sto_make(1, 0, {}); }

StoMatrix function_matrix(std::span<const std::size_t> f, std::size_t rows) {
  std::vector<Rat> entries(rows * f.size(), Rat(0));
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] >= rows) throw DomainError("function value out of range");
    entries[f[k] * f.size() + k] = Rat(1);
  }
  return sto_make(rows, f.size(), std::move(entries));
}

std::vector<Value> L_apply(const SpaceHandle& space, const StoMatrix& a,
                           std::span<const Value> xs) {
  if (xs.size() != a.rows()) {
    throw DomainError("tuple length " + std::to_string(xs.size()) +
                      " does not match " + std::to_string(a.rows()) + " rows");
  }
  std::vector<Value> out;
  out.reserve(a.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    std::vector<std::pair<Value, Coeff>> column;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      column.emplace_back(xs[i], a.at(i, k));
    }
    out.push_back(barycenter(space, dist_make(std::move(column))));
  }
  return out;
}

StoMatrix random_stochastic(Rng& rng, std::size_t rows, std::size_t cols) {
  if (rows == 0) throw DomainError("stochastic matrix needs rows");
  std::vector<Rat> entries(rows * cols, Rat(0));
  for (std::size_t k = 0; k < cols; ++k) {
    long total = 0;
    std::vector<long> parts(rows);
    for (auto& p : parts) {
      p = rng.range(0, 6);
      total += p;
    }
    if (total == 0) {
      parts[std::size_t(rng.below(rows))] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      entries[i * cols + k] = Rat(parts[i], total);
    }
  }
  return sto_make(rows, cols, std::move(entries));
}

namespace {

json tuple_json(std::span<const Value> xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(value_to_json(x));
  return arr;
}

json matrix_json(const StoMatrix& a) {
  json m = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(a.at(i, k).str());
    m.push_back(std::move(row));
  }
  return m;
}

bool tuples_equal(const ConvexSpace& s, std::span<const Value> a,
                  std::span<const Value> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!s.equal(a[i], b[i])) return false;
  }
  return true;
}

std::string tuple_str(std::span<const Value> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + ")";
}

std::vector<Value> draw_tuple(const SpaceHandle& space, Rng& rng,
                              std::size_t n) {
  std::vector<Value> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) xs.push_back(space->sample(rng));
  return xs;
}

}  // namespace

LawReport check_lawvere_functoriality(const SpaceHandle& space,
                                      std::size_t max_dim, long cases,
                                      std::uint64_t seed) {
  if (max_dim == 0) throw DomainError("max_dim must be positive");
  Rng rng(seed);
  LawReport rep;
  auto dim = [&] { return 1 + std::size_t(rng.below(max_dim)); };
  auto record = [&](const char* name, json inputs,
                    std::span<const Value> lhs, std::span<const Value> rhs) {
    rep.count(name);
    if (!tuples_equal(*space, lhs, rhs)) {
      rep.failures.push_back(
          {name, inputs.dump(), tuple_str(lhs), tuple_str(rhs)});
    }
  };
  for (long i = 0; i < cases; ++i) {
    {
      const std::size_t n = dim();
      const auto xs = draw_tuple(space, rng, n);
      const auto lhs = L_apply(space, sto_identity(n), xs);
      record(law::functor_identity, json{{"xs", tuple_json(xs)}}, lhs, xs);
    }
    {
      const std::size_t n = dim();
      const std::size_t m = dim();
      const std::size_t p = dim();
      const StoMatrix b = random_stochastic(rng, n, m);
      const StoMatrix a = random_stochastic(rng, m, p);
      const auto xs = draw_tuple(space, rng, n);
      const auto lhs = L_apply(space, sto_compose(b, a), xs);
      const auto mid = L_apply(space, b, xs);
      const auto rhs = L_apply(space, a, mid);
      record(law::functor_composition,
             json{{"b", matrix_json(b)},
                  {"a", matrix_json(a)},
                  {"xs", tuple_json(xs)}},
             lhs, rhs);
    }
    {
      // Function matrices realize the product projections; the tuple of
      // all singleton inclusions must reproduce the input tuple.
      const std::size_t n = dim();
      const std::size_t m = dim();
      std::vector<std::size_t> f(m);
      for (auto& v : f) v = std::size_t(rng.below(n));
      const auto xs = draw_tuple(space, rng, n);
      const auto lhs = L_apply(space, function_matrix(f, n), xs);
      std::vector<Value> rhs;
      for (std::size_t k = 0; k < m; ++k) rhs.push_back(xs[f[k]]);
      record(law::product_projection,
             json{{"f", f}, {"xs", tuple_json(xs)}}, lhs, rhs);
    }
    {
      const std::size_t n1 = dim();
      const std::size_t m1 = dim();
      const std::size_t n2 = dim();
      const std::size_t m2 = dim();
      const StoMatrix a1 = random_stochastic(rng, n1, m1);
      const StoMatrix a2 = random_stochastic(rng, n2, m2);
      auto xs = draw_tuple(space, rng, n1);
      const auto ys = draw_tuple(space, rng, n2);
      auto both = xs;
      both.insert(both.end(), ys.begin(), ys.end());
      const auto lhs = L_apply(space, sto_tensor(a1, a2), both);
      auto rhs = L_apply(space, a1, xs);
      const auto rhs2 = L_apply(space, a2, ys);
      rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
      record(law::product_tensor,
             json{{"a1", matrix_json(a1)},
                  {"a2", matrix_json(a2)},
                  {"xs", tuple_json(both)}},
             lhs, rhs);
    }
    {
      // The arity-zero end: deleting every input reaches the terminal
      // empty tuple no matter how the deletions are bracketed.
      const std::size_t n = dim();
      StoMatrix all_delete = delete_d();
      for (std::size_t j = 1; j < n; ++j) {
        all_delete = sto_tensor(all_delete, delete_d());
      }
      const auto xs = draw_tuple(space, rng, n);
      const auto lhs = L_apply(space, all_delete, xs);
      record(law::product_terminal, json{{"xs", tuple_json(xs)}}, lhs, {});
    }
  }
  return rep;
}

LawReport check_correspondence_roundtrip(const SpaceHandle& space,
                                         std::span<const Value> samples) {
  if (samples.empty()) throw DomainError("no samples for the roundtrip");
  LawReport rep;
  static const std::vector<Coeff> grid = {
      Coeff(0, 1), Coeff(1, 1), Coeff(1, 2), Coeff(1, 3),
      Coeff(2, 3), Coeff(1, 4), Coeff(3, 4), Coeff(1, 5)};
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      for (const auto& lam : grid) {
        rep.count(law::cc_roundtrip);
        const Value direct = space->combine(lam, x, y);
        const std::vector<Value> pair = {x, y};
        const Value via = L_apply(space, c_lambda(lam), pair).front();
        if (!space->equal(direct, via)) {
          json j{{"x", value_to_json(x)},
                 {"y", value_to_json(y)},
                 {"lambda", lam.str()}};
          rep.failures.push_back(
              {law::cc_roundtrip, j.dump(), direct.str(), via.str()});
        }
      }
    }
  }
  // Barycenters through the single-column matrix of their own weights.
  Rng mix(0x6a09e667f3bcc909ull);
  for (std::size_t start = 0; start < samples.size(); ++start) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(4, samples.size());
         ++n) {
      std::vector<Value> pts;
      for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(samples[(start + i) % samples.size()]);
      }
      const Dist d = random_dist(mix, pts);
      rep.count(law::barycenter_roundtrip);
      const Value direct = barycenter(space, d);
      std::vector<Rat> column;
      std::vector<Value> points;
      for (const auto& [pt, w] : d.support) {
        column.push_back(w.value());
        points.push_back(pt);
      }
      const StoMatrix a = sto_make(points.size(), 1, std::move(column));
      const Value via = L_apply(space, a, points).front();
      if (!space->equal(direct, via)) {
        json j{{"d", value_to_json(Value::dist(d))}};
        rep.failures.push_back(
            {law::barycenter_roundtrip, j.dump(), direct.str(), via.str()});
      }
    }
  }
  return rep;
}

LawReport run_roundtrip_suite(const SpaceHandle& space, std::uint64_t seed,
                              long cases) {
  if (cases <= 0) throw DomainError("case count must be positive");
  Rng rng(seed);
  std::size_t n = 3;
  while (long(n * n * 8) < cases) ++n;
  std::vector<Value> samples;
  samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) samples.push_back(space->sample(rng));
  return check_correspondence_roundtrip(space, samples);
}

}  // namespace cvx
