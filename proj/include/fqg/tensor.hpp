#pragma once

#include <numeric>
#include <vector>

#include "fqg/linear_map.hpp"

namespace fqg {

// Tensor products use the row-major convention throughout: in V_0 ⊗ ... ⊗ V_k
// the basis vector e_{i_0} ⊗ ... ⊗ e_{i_k} has index
// ((i_0 * d_1 + i_1) * d_2 + ...) * d_k + i_k.

using Dims = std::vector<std::size_t>;

inline std::size_t total_dim(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

template <Scalar S>
Element<S> tensor_vectors(std::span<const S> x, std::span<const S> y) {
  Element<S> out(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

/// (id ⊗ ... ⊗ m ⊗ ... ⊗ id) x, with m acting on tensor leg `factor`.
template <Scalar S>
Element<S> apply_to_factor(const Dims& dims, std::size_t factor, const LinearMap<S>& m, std::span<const S> x) {
  if (factor >= dims.size()) throw DimensionError("apply_to_factor: no such tensor leg");
  if (x.size() != total_dim(dims)) throw DimensionError("apply_to_factor: vector does not match tensor shape");
  const std::size_t mid = dims[factor];
  if (m.cols() != mid) throw DimensionError("apply_to_factor: map source does not match tensor leg");
  std::size_t inner = 1;
  for (std::size_t k = factor + 1; k < dims.size(); ++k) inner *= dims[k];
  const std::size_t rows = m.rows();
  Element<S> out(x.size() / mid * rows);
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx].is_zero()) continue;
    const std::size_t in = idx % inner;
    const std::size_t c = (idx / inner) % mid;
    const std::size_t o = idx / (inner * mid);
    for (std::size_t r = 0; r < rows; ++r) {
      const S& a = m(r, c);
      if (!a.is_zero()) out[(o * rows + r) * inner + in] += a * x[idx];
    }
  }
  return out;
}

/// Column-wise version: (id ⊗ m ⊗ id) ∘ f.
template <Scalar S>
LinearMap<S> apply_to_factor(const Dims& dims, std::size_t factor, const LinearMap<S>& m, const LinearMap<S>& f) {
  Dims out_dims = dims;
  out_dims.at(factor) = m.rows();
  LinearMap<S> out(total_dim(out_dims), f.cols(), {}, f.source_label());
  for (std::size_t c = 0; c < f.cols(); ++c) out.set_column(c, apply_to_factor<S>(dims, factor, m, f.column(c)));
  return out;
}

/// Reorders tensor legs: leg k of the result is leg perm[k] of the input.
template <Scalar S>
Element<S> permute_factors(const Dims& dims, const std::vector<std::size_t>& perm, std::span<const S> x) {
  if (perm.size() != dims.size() || x.size() != total_dim(dims)) throw DimensionError("permute_factors: bad shape");
  Dims out_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims.at(perm[k]);
  Element<S> out(x.size());
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx].is_zero()) continue;
    std::size_t rest = idx;
    for (std::size_t k = dims.size(); k-- > 0;) {
      digits[k] = rest % dims[k];
      rest /= dims[k];
    }
    std::size_t target = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) target = target * out_dims[k] + digits[perm[k]];
    out[target] = x[idx];
  }
  return out;
}

/// Kronecker product a ⊗ b of two maps.
template <Scalar S>
LinearMap<S> kron(const LinearMap<S>& a, const LinearMap<S>& b) {
  LinearMap<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace fqg
