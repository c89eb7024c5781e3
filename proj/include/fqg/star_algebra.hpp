#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fqg/linear_map.hpp"
#include "fqg/report.hpp"
#include "fqg/tensor.hpp"

namespace fqg {

/// e_i · e_j = Σ_k coeff e_k contributes one entry (i, j, k, coeff).
template <Scalar S>
struct StructureConstant {
  std::size_t i, j, k;
  S coeff;
};

/// Finite-dimensional associative *-algebra given by sparse structure
/// constants, a unit, and an involution matrix St with
/// (Σ c_i e_i)* = Σ conj(c_i) St(e_i). Immutable once built.
template <Scalar S>
class StarAlgebra {
 public:
  using TermList = std::vector<Term<S>>;

  StarAlgebra(std::size_t dim, std::vector<TermList> products, Element<S> unit, LinearMap<S> star, std::string label);

  /// Sums duplicate entries and drops zeros.
  static StarAlgebra from_structure_constants(std::size_t dim, const std::vector<StructureConstant<S>>& constants,
                                              Element<S> unit, LinearMap<S> star, std::string label);

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const Element<S>& unit() const { return unit_; }
  const LinearMap<S>& star_matrix() const { return star_; }
  const TermList& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  /// All nonzero structure constants ordered by (i, j, k).
  std::vector<StructureConstant<S>> structure_constants() const;

  Element<S> multiply(std::span<const S> x, std::span<const S> y) const;
  Element<S> star(std::span<const S> x) const;
  Element<S> basis(std::size_t i) const { return basis_vector<S>(dim_, i); }

  friend bool operator==(const StarAlgebra& a, const StarAlgebra& b) {
    return a.dim_ == b.dim_ && a.unit_ == b.unit_ && a.star_ == b.star_ &&
           a.structure_constants_equal(b);
  }

 private:
  bool structure_constants_equal(const StarAlgebra& other) const;

  std::size_t dim_;
  std::vector<TermList> products_;
  Element<S> unit_;
  LinearMap<S> star_;
  std::string label_;
};

template <Scalar S>
using AlgebraPtr = std::shared_ptr<const StarAlgebra<S>>;

template <Scalar S>
Element<S> multiply(const StarAlgebra<S>& a, std::span<const S> x, std::span<const S> y) {
  return a.multiply(x, y);
}

template <Scalar S>
Element<S> star(const StarAlgebra<S>& a, std::span<const S> x) {
  return a.star(x);
}

/// The one-dimensional algebra ℂ.
template <Scalar S>
StarAlgebra<S> scalar_algebra();

/// A ⊗ B on the row-major basis e_i ⊗ f_j ↦ i·dim(B) + j, with (a⊗b)* = a*⊗b*.
template <Scalar S>
StarAlgebra<S> tensor_algebra(const StarAlgebra<S>& a, const StarAlgebra<S>& b);

/// Product in A ⊗ B without materializing its structure constants.
template <Scalar S>
Element<S> tensor_multiply(const StarAlgebra<S>& a, const StarAlgebra<S>& b, std::span<const S> x,
                           std::span<const S> y);

/// (* ⊗ *) on A ⊗ B.
template <Scalar S>
Element<S> tensor_star(const StarAlgebra<S>& a, const StarAlgebra<S>& b, std::span<const S> x);

/// The flip A ⊗ B → B ⊗ A.
template <Scalar S>
LinearMap<S> flip(const StarAlgebra<S>& a, const StarAlgebra<S>& b);
template <Scalar S>
LinearMap<S> flip(std::size_t dim_a, std::size_t dim_b);

/// Checks associativity, unit laws, and that * is involutive and
/// antimultiplicative. An empty violation list means pass.
template <Scalar S>
Report verify_star_algebra(const StarAlgebra<S>& a);

template <Scalar S>
bool is_commutative(const StarAlgebra<S>& a);

/// True when the basis consists of self-adjoint, mutually orthogonal minimal
/// idempotents summing to 1, i.e. the algebra is functions on a finite set
/// written in its point basis.
template <Scalar S>
bool is_point_basis(const StarAlgebra<S>& a);

/// ⊕ M_{n_i} with matrix-unit basis (block by block, e_rs row-major inside a
/// block) and conjugate-transpose involution, plus a weighted trace.
template <Scalar S>
struct BlockAlgebra {
  std::vector<std::size_t> blocks;
  std::vector<S> weights;
  StarAlgebra<S> algebra;
  /// τ(e_rs) = weight of the block when r = s, else 0.
  Element<S> trace;
};

/// Weights default to 1 per block. Throws InvalidStructure on empty blocks or
/// non-positive weights.
template <Scalar S>
BlockAlgebra<S> make_block_algebra(const std::vector<std::size_t>& blocks, std::vector<S> weights = {});

/// Checks that the weighted trace is tracial and that its Gram matrix
/// τ(e_j* e_i) is diagonal with positive entries.
template <Scalar S>
Report verify_block_trace(const BlockAlgebra<S>& b);

}  // namespace fqg
