#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/scalar.hpp"

namespace fqg {

/// Coefficient array of an element of a finite-dimensional space.
template <Scalar S>
using Element = std::vector<S>;

/// One nonzero coordinate of a sparse vector.
template <Scalar S>
struct Term {
  std::size_t index;
  S coeff;
};

/// Dense matrix of a linear map, stored row-major as target_dim x source_dim.
/// Column j holds the image of the j-th source basis vector. The labels name
/// the spaces on either side ("A", "A⊗B", "ℂ", ...) and take no part in
/// equality.
template <Scalar S>
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t target_dim, std::size_t source_dim, std::string target = {}, std::string source = {})
      : rows_(target_dim), cols_(source_dim), data_(target_dim * source_dim), target_(std::move(target)),
        source_(std::move(source)) {}

  static LinearMap identity(std::size_t n, const std::string& label = {}) {
    LinearMap m(n, n, label, label);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// A 1 x n map from a coefficient row (functionals).
  static LinearMap functional(std::span<const S> row, std::string source = {}) {
    LinearMap m(1, row.size(), "ℂ", std::move(source));
    for (std::size_t j = 0; j < row.size(); ++j) m(0, j) = row[j];
    return m;
  }

  /// An n x 1 map whose single column is the given vector.
  static LinearMap column_vector(std::span<const S> col, std::string target = {}) {
    LinearMap m(col.size(), 1, std::move(target), "ℂ");
    for (std::size_t i = 0; i < col.size(); ++i) m(i, 0) = col[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t target_dim() const { return rows_; }
  std::size_t source_dim() const { return cols_; }
  const std::string& target_label() const { return target_; }
  const std::string& source_label() const { return source_; }
  LinearMap& relabel(std::string target, std::string source) {
    target_ = std::move(target);
    source_ = std::move(source);
    return *this;
  }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<S> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Element<S> column(std::size_t c) const {
    Element<S> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_column(std::size_t c, std::span<const S> v) {
    if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Element<S> apply(std::span<const S> x) const {
    if (x.size() != cols_) {
      throw DimensionError("apply: map " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                           " applied to vector of length " + std::to_string(x.size()));
    }
    Element<S> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const S& a = (*this)(r, c);
        if (!a.is_zero()) out[r] += a * x[c];
      }
    }
    return out;
  }

  LinearMap transpose() const {
    LinearMap t(cols_, rows_, source_, target_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  LinearMap conjugate() const {
    LinearMap t = *this;
    for (auto& v : t.data_) v = v.conj();
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  const std::vector<S>& data() const { return data_; }

  /// Composition: (a * b)(x) = a(b(x)).
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("compose: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " after " +
                           std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    LinearMap out(a.rows_, b.cols_, a.target_, b.source_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend LinearMap operator*(const S& s, LinearMap m) {
    for (auto& v : m.data_) v = s * v;
    return m;
  }

  friend LinearMap operator+(LinearMap a, const LinearMap& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend LinearMap operator-(LinearMap a, const LinearMap& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const LinearMap& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("shape mismatch in map arithmetic");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
  std::string target_;
  std::string source_;
};

/// Nonzero entries of each column, in increasing row order.
template <Scalar S>
std::vector<std::vector<Term<S>>> sparse_columns(const LinearMap<S>& m) {
  std::vector<std::vector<Term<S>>> cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) cols[c].push_back({r, m(r, c)});
  return cols;
}

template <Scalar S>
std::vector<Term<S>> sparse_terms(std::span<const S> x) {
  std::vector<Term<S>> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out.push_back({i, x[i]});
  return out;
}

template <Scalar S>
bool is_zero_vector(std::span<const S> x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

template <Scalar S>
Element<S> scaled(const S& s, std::span<const S> x) {
  Element<S> out(x.begin(), x.end());
  for (auto& v : out) v = s * v;
  return out;
}

template <Scalar S>
Element<S> difference(std::span<const S> a, std::span<const S> b) {
  if (a.size() != b.size()) throw DimensionError("difference: length mismatch");
  Element<S> out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

template <Scalar S>
Element<S> basis_vector(std::size_t dim, std::size_t i) {
  Element<S> e(dim);
  e.at(i) = S(1);
  return e;
}

template <Scalar S>
S dot(std::span<const S> a, std::span<const S> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  S acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

/// Index of the first differing coordinate, or size() when equal.
template <Scalar S>
std::size_t first_difference(std::span<const S> a, std::span<const S> b) {
  if (a.size() != b.size()) throw DimensionError("compare: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return i;
  return a.size();
}

template <Scalar S>
bool vectors_equal(std::span<const S> a, std::span<const S> b) {
  return a.size() == b.size() && first_difference(a, b) == a.size();
}

}  // namespace fqg
