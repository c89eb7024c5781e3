#include "fqg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace fqg {

namespace {

using Rows = std::vector<std::vector<Exact>>;

// Multiplies every row by the lcm of its denominators so all entries are
// Gaussian integers.
void clear_denominators(Rows& rows) {
  for (auto& row : rows) {
    mpz_class l = 1;
    for (const auto& v : row) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().get_den_mpz_t());
    }
    if (l == 1) continue;
    const Exact scale{mpq_class(l)};
    for (auto& v : row)
      if (!v.is_zero()) v *= scale;
  }
}

// Fraction-free row echelon form; returns the rank. Every division is exact
// in Z[i] because the entries stay minors of the input.
std::size_t bareiss_rank(Rows rows, std::size_t cols) {
  clear_denominators(rows);
  const std::size_t n = rows.size();
  Exact prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    const Exact& p = rows[rank][col];
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Exact f = rows[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Exact v = p * rows[i][j];
        if (!f.is_zero() && !rows[rank][j].is_zero()) v -= f * rows[rank][j];
        if (!v.is_zero()) v /= prev;
        rows[i][j] = std::move(v);
      }
      rows[i][col] = Exact();
    }
    prev = p;
    ++rank;
  }
  return rank;
}

// Rank modulo a prime p = 1 (mod 4), with i sent to a square root of -1.
// Reduction is a ring homomorphism, so this never exceeds the true rank.
// Returns nullopt when some denominator vanishes mod p.
constexpr std::uint64_t kPrime = 2147483629;
constexpr std::uint64_t kSqrtMinusOne = 629208553;

std::optional<std::uint64_t> reduce_mod(const mpq_class& q) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  std::uint64_t inv = 1, base = den, e = kPrime - 2;
  while (e) {
    if (e & 1) inv = inv * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return num * inv % kPrime;
}

std::optional<std::size_t> modular_rank(const Rows& rows, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Exact& v = rows[i][j];
      if (v.is_zero()) continue;
      auto re = reduce_mod(v.re());
      auto im = reduce_mod(v.im());
      if (!re || !im) return std::nullopt;
      m[i][j] = (*re + *im * kSqrtMinusOne) % kPrime;
    }
  auto inverse_mod = [](std::uint64_t a) {
    std::uint64_t r = 1, e = kPrime - 2;
    while (e) {
      if (e & 1) r = r * a % kPrime;
      a = a * a % kPrime;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = inverse_mod(m[rank][col]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const std::uint64_t f = m[i][col] * inv % kPrime;
      for (std::size_t j = col; j < cols; ++j)
        if (m[rank][j] != 0) m[i][j] = (m[i][j] + (kPrime - f) * m[rank][j]) % kPrime;
    }
    ++rank;
  }
  return rank;
}

double magnitude(const Approx& v) { return std::abs(v.to_complex()); }

std::size_t pivoting_rank(std::vector<std::vector<Approx>> rows, std::size_t cols) {
  double scale = 1.0;
  for (const auto& r : rows)
    for (const auto& v : r) scale = std::max(scale, magnitude(v));
  const double tol = Approx::tolerance() * scale;
  const std::size_t n = rows.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < n; ++col) {
    std::size_t pivot = rank;
    double best = magnitude(rows[rank][col]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (double m = magnitude(rows[i][col]); m > best) {
        best = m;
        pivot = i;
      }
    }
    if (best <= tol) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Approx f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Gauss-Jordan reduction in place, pivoting in the first `cols` columns and
// carrying augmented columns along. Returns the pivot column of each pivot row.
template <Scalar S>
std::vector<std::size_t> reduce(std::vector<std::vector<S>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    if constexpr (S::is_exact) {
      while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
      if (pivot == rows.size()) continue;
    } else {
      double best = 0.0;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (double m = std::abs(rows[i][col].to_complex()); m > best) {
          best = m;
          pivot = i;
        }
      }
      if (best <= S::tolerance()) continue;
    }
    std::swap(rows[pivot], rows[r]);
    const S inv = S(1) / rows[r][col];
    const std::size_t width = rows[r].size();
    for (std::size_t j = col; j < width; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const S f = rows[i][col];
      for (std::size_t j = col; j < width; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

template <Scalar S>
std::vector<std::vector<S>> rows_of(const LinearMap<S>& m) {
  std::vector<std::vector<S>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return rows;
}

}  // namespace

template <Scalar S>
std::size_t rank_of_span(const std::vector<Element<S>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<S>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != cols) throw DimensionError("rank_of_span: vectors of different lengths");
    if (!is_zero_vector<S>(v)) rows.push_back(v);
  }
  if (rows.empty()) return 0;
  if constexpr (S::is_exact) {
    // A full-rank certificate mod p settles the question without growth.
    if (auto r = modular_rank(rows, cols); r && *r == std::min(rows.size(), cols)) return *r;
    return bareiss_rank(std::move(rows), cols);
  } else {
    return pivoting_rank(std::move(rows), cols);
  }
}

template <Scalar S>
std::size_t rank(const LinearMap<S>& m) {
  return rank_of_span<S>(rows_of(m));
}

template <Scalar S>
std::vector<Element<S>> nullspace(const LinearMap<S>& m) {
  auto rows = rows_of(m);
  const auto pivots = reduce(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Element<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Element<S> v(m.cols());
    v[free] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Scalar S>
std::optional<LinearMap<S>> inverse(const LinearMap<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::vector<S>> rows(n, std::vector<S>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n + i] = S(1);
  }
  const auto pivots = reduce(rows, n);
  if (pivots.size() != n) return std::nullopt;
  LinearMap<S> inv(n, n, m.source_label(), m.target_label());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  return inv;
}

template <Scalar S>
std::vector<S> leading_principal_minors(const LinearMap<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("leading_principal_minors: matrix not square");
  auto a = rows_of(m);
  const std::size_t n = m.rows();
  std::vector<S> minors;
  S prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    // After k elimination steps a[k][k] is the (k+1)-th leading minor.
    minors.push_back(a[k][k]);
    if (a[k][k].is_zero()) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = S();
    }
    prev = a[k][k];
  }
  return minors;
}

template <Scalar S>
S determinant(const LinearMap<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return S(1);
  auto a = rows_of(m);
  S prev(1);
  S sign(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return S();
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = S();
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

template <Scalar S>
bool is_hermitian(const LinearMap<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i).conj())) return false;
  return true;
}

template <Scalar S>
bool is_positive_definite(const LinearMap<S>& m) {
  if (!is_hermitian(m)) return false;
  const auto minors = leading_principal_minors(m);
  if (minors.size() != m.rows()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const S& d) { return d.is_real() && d.real_sign() > 0; });
}

#define FQG_INSTANTIATE(S)                                                          \
  template std::size_t rank_of_span<S>(const std::vector<Element<S>>&);            \
  template std::size_t rank<S>(const LinearMap<S>&);                                \
  template std::vector<Element<S>> nullspace<S>(const LinearMap<S>&);              \
  template std::optional<LinearMap<S>> inverse<S>(const LinearMap<S>&);            \
  template std::vector<S> leading_principal_minors<S>(const LinearMap<S>&);        \
  template S determinant<S>(const LinearMap<S>&);                                   \
  template bool is_hermitian<S>(const LinearMap<S>&);                               \
  template bool is_positive_definite<S>(const LinearMap<S>&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
