#pragma once

#include <cstdint>
#include <span>

#include "cvx/laws.hpp"
#include "cvx/space.hpp"

namespace cvx {

namespace law {
inline constexpr const char* functor_identity = "functor-identity";
inline constexpr const char* functor_composition = "functor-composition";
inline constexpr const char* product_projection = "product-projection";
inline constexpr const char* product_tensor = "product-tensor";
inline constexpr const char* product_terminal = "product-terminal";
inline constexpr const char* cc_roundtrip = "cc-roundtrip";
inline constexpr const char* barycenter_roundtrip = "barycenter-roundtrip";
}  // namespace law

// Column-stochastic matrix with exact entries: n rows and m columns make
// a theory morphism from m-tuples to n-tuples, evaluated contravariantly
// by L_apply. Entry (i, k) is the weight of input i in output k.
class StoMatrix {
public:
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Coeff& at(std::size_t i, std::size_t k) const {
    return entries_[i * cols_ + k];
  }

private:
  friend StoMatrix sto_make(std::size_t, std::size_t, std::vector<Rat>);
  StoMatrix(std::size_t rows, std::size_t cols, std::vector<Coeff> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {}
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> entries_;
};

// Validating constructor over row-major entries.
StoMatrix sto_make(std::size_t rows, std::size_t cols,
                   std::vector<Rat> entries);

StoMatrix sto_identity(std::size_t n);

// Exact product b * a; composition of theory morphisms.
StoMatrix sto_compose(const StoMatrix& b, const StoMatrix& a);

// Block-diagonal sum; the tensor of theory morphisms.
StoMatrix sto_tensor(const StoMatrix& a, const StoMatrix& b);

// The distinguished generators.
StoMatrix c_lambda(const Coeff& lambda);  // the 2x1 column (lambda, 1-lambda)
StoMatrix copy_e();                       // 1x2, duplicates its input
StoMatrix swap_s();                       // 2x2 transposition
StoMatrix delete_d();                     // 1x0, forgets its input

// 0/1 matrix of a plain function f: outputs index into inputs, so column
// k carries a single 1 in row f[k]. rows bounds the input arity.
StoMatrix function_matrix(std::span<const std::size_t> f, std::size_t rows);

// Evaluation of the model: n-tuples to m-tuples, output k the barycenter
// of column k over xs.
std::vector<Value> L_apply(const SpaceHandle& space, const StoMatrix& a,
                           std::span<const Value> xs);

// Random column-stochastic matrix with small exact entries.
StoMatrix random_stochastic(Rng& rng, std::size_t rows, std::size_t cols);

// Functoriality (identity and contravariant composition) plus the three
// product-preservation characterizations: projections through function
// matrices, tensor as pairwise product, and the terminal arity-zero
// morphism. Each named check runs once per case.
LawReport check_lawvere_functoriality(const SpaceHandle& space,
                                      std::size_t max_dim, long cases,
                                      std::uint64_t seed);

// Round-trips between the two presentations of the structure: cc through
// the generator column and back, and the barycenter through the
// single-column matrix of its weights and back.
LawReport check_correspondence_roundtrip(const SpaceHandle& space,
                                         std::span<const Value> samples);

// Seeded wrapper around check_correspondence_roundtrip drawing at least
// enough samples for the requested number of checks.
LawReport run_roundtrip_suite(const SpaceHandle& space, std::uint64_t seed,
                              long cases);

}  // namespace cvx
