#include "fqg/star_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "fqg/error.hpp"
#include "fqg/parallel.hpp"

namespace fqg {

namespace {

template <Scalar S>
std::vector<std::size_t> support(std::span<const S> x) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) idx.push_back(i);
  return idx;
}

long as_long(std::size_t v) { return static_cast<long>(v); }

}  // namespace

template <Scalar S>
StarAlgebra<S>::StarAlgebra(std::size_t dim, std::vector<TermList> products, Element<S> unit, LinearMap<S> star,
                            std::string label)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)), star_(std::move(star)),
      label_(std::move(label)) {
  if (dim_ == 0) throw InvalidStructure("algebra dimension must be positive");
  if (products_.size() != dim_ * dim_) throw DimensionError("structure constants: expected dim^2 product lists");
  if (unit_.size() != dim_) throw DimensionError("unit has wrong length");
  if (star_.rows() != dim_ || star_.cols() != dim_) throw DimensionError("involution matrix has wrong shape");
  for (const auto& list : products_)
    for (const auto& t : list)
      if (t.index >= dim_) throw DimensionError("structure constant index out of range");
}

template <Scalar S>
StarAlgebra<S> StarAlgebra<S>::from_structure_constants(std::size_t dim,
                                                        const std::vector<StructureConstant<S>>& constants,
                                                        Element<S> unit, LinearMap<S> star, std::string label) {
  std::vector<std::map<std::size_t, S>> acc(dim * dim);
  for (const auto& c : constants) {
    if (c.i >= dim || c.j >= dim || c.k >= dim) throw DimensionError("structure constant index out of range");
    acc[c.i * dim + c.j][c.k] += c.coeff;
  }
  std::vector<TermList> products(dim * dim);
  for (std::size_t p = 0; p < acc.size(); ++p)
    for (auto& [k, v] : acc[p])
      if (!v.is_zero()) products[p].push_back({k, v});
  return StarAlgebra(dim, std::move(products), std::move(unit), std::move(star), std::move(label));
}

template <Scalar S>
std::vector<StructureConstant<S>> StarAlgebra<S>::structure_constants() const {
  std::vector<StructureConstant<S>> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto terms = product(i, j);
      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
      for (const auto& t : terms) out.push_back({i, j, t.index, t.coeff});
    }
  return out;
}

template <Scalar S>
bool StarAlgebra<S>::structure_constants_equal(const StarAlgebra& other) const {
  for (std::size_t p = 0; p < products_.size(); ++p) {
    Element<S> a(dim_), b(dim_);
    for (const auto& t : products_[p]) a[t.index] += t.coeff;
    for (const auto& t : other.products_[p]) b[t.index] += t.coeff;
    if (!vectors_equal<S>(a, b)) return false;
  }
  return true;
}

template <Scalar S>
Element<S> StarAlgebra<S>::multiply(std::span<const S> x, std::span<const S> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DimensionError("multiply: element length does not match algebra '" + label_ + "' of dimension " +
                         std::to_string(dim_));
  }
  Element<S> out(dim_);
  const auto sy = support(y);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j : sy) {
      const S xy = x[i] * y[j];
      for (const auto& t : product(i, j)) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

template <Scalar S>
Element<S> StarAlgebra<S>::star(std::span<const S> x) const {
  if (x.size() != dim_) throw DimensionError("star: element length does not match algebra '" + label_ + "'");
  Element<S> conj(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) conj[i] = x[i].conj();
  return star_.apply(conj);
}

template <Scalar S>
StarAlgebra<S> scalar_algebra() {
  std::vector<typename StarAlgebra<S>::TermList> products(1);
  products[0].push_back({0, S(1)});
  return StarAlgebra<S>(1, std::move(products), Element<S>{S(1)}, LinearMap<S>::identity(1), "ℂ");
}

template <Scalar S>
StarAlgebra<S> tensor_algebra(const StarAlgebra<S>& a, const StarAlgebra<S>& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<typename StarAlgebra<S>::TermList> products(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          auto& out = products[(i * nb + j) * n + (k * nb + l)];
          for (const auto& ta : a.product(i, k))
            for (const auto& tb : b.product(j, l)) out.push_back({ta.index * nb + tb.index, ta.coeff * tb.coeff});
        }
  return StarAlgebra<S>(n, std::move(products), tensor_vectors<S>(a.unit(), b.unit()),
                        kron(a.star_matrix(), b.star_matrix()), a.label() + "⊗" + b.label());
}

template <Scalar S>
Element<S> tensor_multiply(const StarAlgebra<S>& a, const StarAlgebra<S>& b, std::span<const S> x,
                           std::span<const S> y) {
  const std::size_t nb = b.dim(), n = a.dim() * nb;
  if (x.size() != n || y.size() != n) throw DimensionError("tensor_multiply: element length does not match A⊗B");
  Element<S> out(n);
  const auto sx = support(x);
  const auto sy = support(y);
  for (std::size_t p : sx) {
    const std::size_t i = p / nb, j = p % nb;
    for (std::size_t q : sy) {
      const std::size_t k = q / nb, l = q % nb;
      const auto& ta = a.product(i, k);
      if (ta.empty()) continue;
      const auto& tb = b.product(j, l);
      if (tb.empty()) continue;
      const S xy = x[p] * y[q];
      for (const auto& u : ta) {
        const S c = xy * u.coeff;
        for (const auto& v : tb) out[u.index * nb + v.index] += c * v.coeff;
      }
    }
  }
  return out;
}

template <Scalar S>
Element<S> tensor_star(const StarAlgebra<S>& a, const StarAlgebra<S>& b, std::span<const S> x) {
  const std::size_t nb = b.dim(), n = a.dim() * nb;
  if (x.size() != n) throw DimensionError("tensor_star: element length does not match A⊗B");
  Element<S> out(n);
  const auto& sa = a.star_matrix();
  const auto& sb = b.star_matrix();
  for (std::size_t p : support(x)) {
    const std::size_t i = p / nb, j = p % nb;
    const S c = x[p].conj();
    for (std::size_t r = 0; r < a.dim(); ++r) {
      if (sa(r, i).is_zero()) continue;
      const S cr = c * sa(r, i);
      for (std::size_t s = 0; s < nb; ++s)
        if (!sb(s, j).is_zero()) out[r * nb + s] += cr * sb(s, j);
    }
  }
  return out;
}

template <Scalar S>
LinearMap<S> flip(std::size_t dim_a, std::size_t dim_b) {
  LinearMap<S> m(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) m(j * dim_a + i, i * dim_b + j) = S(1);
  return m;
}

template <Scalar S>
LinearMap<S> flip(const StarAlgebra<S>& a, const StarAlgebra<S>& b) {
  return flip<S>(a.dim(), b.dim()).relabel(b.label() + "⊗" + a.label(), a.label() + "⊗" + b.label());
}

template <Scalar S>
Report verify_star_algebra(const StarAlgebra<S>& a) {
  Report report("star algebra " + a.label());
  const std::size_t n = a.dim();
  const auto& one = a.unit();

  report.add(sweep("unit_left", n, [&](std::size_t i) -> std::optional<std::vector<long>> {
    if (vectors_equal<S>(a.multiply(one, a.basis(i)), a.basis(i))) return std::nullopt;
    return std::vector<long>{as_long(i)};
  }));
  report.add(sweep("unit_right", n, [&](std::size_t i) -> std::optional<std::vector<long>> {
    if (vectors_equal<S>(a.multiply(a.basis(i), one), a.basis(i))) return std::nullopt;
    return std::vector<long>{as_long(i)};
  }));

  // Row products e_i e_j as dense vectors, reused by the associativity sweep.
  std::vector<Element<S>> prod(n * n);
  parallel_for(n * n, [&](std::size_t p) { prod[p] = a.multiply(a.basis(p / n), a.basis(p % n)); });

  report.add(sweep("associativity", n * n * n, [&](std::size_t t) -> std::optional<std::vector<long>> {
    const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
    // (e_i e_j) e_k = Σ_m c_ij^m e_m e_k ;  e_i (e_j e_k) = Σ_m c_jk^m e_i e_m
    Element<S> lhs(n), rhs(n);
    for (const auto& u : a.product(i, j))
      for (const auto& v : a.product(u.index, k)) lhs[v.index] += u.coeff * v.coeff;
    for (const auto& u : a.product(j, k))
      for (const auto& v : a.product(i, u.index)) rhs[v.index] += u.coeff * v.coeff;
    if (vectors_equal<S>(lhs, rhs)) return std::nullopt;
    return std::vector<long>{as_long(i), as_long(j), as_long(k)};
  }));

  report.add(sweep("involutive", n, [&](std::size_t i) -> std::optional<std::vector<long>> {
    if (vectors_equal<S>(a.star(a.star(a.basis(i))), a.basis(i))) return std::nullopt;
    return std::vector<long>{as_long(i)};
  }));

  std::vector<Element<S>> stars(n);
  for (std::size_t i = 0; i < n; ++i) stars[i] = a.star(a.basis(i));
  report.add(sweep("antimultiplicative", n * n, [&](std::size_t p) -> std::optional<std::vector<long>> {
    const std::size_t i = p / n, j = p % n;
    if (vectors_equal<S>(a.star(prod[p]), a.multiply(stars[j], stars[i]))) return std::nullopt;
    return std::vector<long>{as_long(i), as_long(j)};
  }));
  return report;
}

template <Scalar S>
bool is_commutative(const StarAlgebra<S>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!vectors_equal<S>(a.multiply(a.basis(i), a.basis(j)), a.multiply(a.basis(j), a.basis(i)))) return false;
  return true;
}

template <Scalar S>
bool is_point_basis(const StarAlgebra<S>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.unit()[i] == S(1))) return false;
    if (!vectors_equal<S>(a.star(a.basis(i)), a.basis(i))) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const auto expected = i == j ? a.basis(i) : Element<S>(n);
      if (!vectors_equal<S>(a.multiply(a.basis(i), a.basis(j)), expected)) return false;
    }
  }
  return true;
}

template <Scalar S>
BlockAlgebra<S> make_block_algebra(const std::vector<std::size_t>& blocks, std::vector<S> weights) {
  if (blocks.empty()) throw InvalidStructure("block algebra needs at least one block");
  if (weights.empty()) weights.assign(blocks.size(), S(1));
  if (weights.size() != blocks.size()) throw DimensionError("one trace weight per block required");
  for (const auto& w : weights)
    if (!w.is_real() || w.real_sign() <= 0) throw InvalidStructure("trace weights must be positive");

  std::size_t dim = 0;
  for (auto m : blocks) {
    if (m == 0) throw InvalidStructure("block sizes must be positive");
    dim += m * m;
  }
  std::vector<StructureConstant<S>> constants;
  Element<S> unit(dim), trace(dim);
  LinearMap<S> star(dim, dim);
  std::string label;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t m = blocks[b];
    auto idx = [&](std::size_t r, std::size_t s) { return offset + r * m + s; };
    for (std::size_t r = 0; r < m; ++r) {
      unit[idx(r, r)] = S(1);
      trace[idx(r, r)] = weights[b];
      for (std::size_t s = 0; s < m; ++s) {
        star(idx(s, r), idx(r, s)) = S(1);
        for (std::size_t u = 0; u < m; ++u) constants.push_back({idx(r, s), idx(s, u), idx(r, u), S(1)});
      }
    }
    offset += m * m;
    label += (b == 0 ? "" : "⊕") + (m == 1 ? std::string("ℂ") : "M" + std::to_string(m));
  }
  auto algebra = StarAlgebra<S>::from_structure_constants(dim, constants, unit, star, label);
  return BlockAlgebra<S>{blocks, std::move(weights), std::move(algebra), std::move(trace)};
}

template <Scalar S>
Report verify_block_trace(const BlockAlgebra<S>& b) {
  Report report("block trace " + b.algebra.label());
  const auto& a = b.algebra;
  const std::size_t n = a.dim();
  auto tau = [&](const Element<S>& x) { return dot<S>(b.trace, x); };
  report.add(sweep("trace_tracial", n * n, [&](std::size_t p) -> std::optional<std::vector<long>> {
    const std::size_t i = p / n, j = p % n;
    if (tau(a.multiply(a.basis(i), a.basis(j))) == tau(a.multiply(a.basis(j), a.basis(i)))) return std::nullopt;
    return std::vector<long>{as_long(i), as_long(j)};
  }));
  report.add(sweep("trace_gram_diagonal_positive", n * n, [&](std::size_t p) -> std::optional<std::vector<long>> {
    const std::size_t i = p / n, j = p % n;
    const S g = tau(a.multiply(a.star(a.basis(j)), a.basis(i)));
    const bool ok = i == j ? (g.is_real() && g.real_sign() > 0) : g.is_zero();
    if (ok) return std::nullopt;
    return std::vector<long>{as_long(i), as_long(j)};
  }));
  return report;
}

#define FQG_INSTANTIATE(S)                                                                                   \
  template class StarAlgebra<S>;                                                                            \
  template StarAlgebra<S> scalar_algebra<S>();                                                              \
  template StarAlgebra<S> tensor_algebra<S>(const StarAlgebra<S>&, const StarAlgebra<S>&);                  \
  template Element<S> tensor_multiply<S>(const StarAlgebra<S>&, const StarAlgebra<S>&, std::span<const S>,  \
                                         std::span<const S>);                                               \
  template Element<S> tensor_star<S>(const StarAlgebra<S>&, const StarAlgebra<S>&, std::span<const S>);     \
  template LinearMap<S> flip<S>(const StarAlgebra<S>&, const StarAlgebra<S>&);                              \
  template LinearMap<S> flip<S>(std::size_t, std::size_t);                                                  \
  template Report verify_star_algebra<S>(const StarAlgebra<S>&);                                            \
  template bool is_commutative<S>(const StarAlgebra<S>&);                                                   \
  template bool is_point_basis<S>(const StarAlgebra<S>&);                                                   \
  template BlockAlgebra<S> make_block_algebra<S>(const std::vector<std::size_t>&, std::vector<S>);          \
  template Report verify_block_trace<S>(const BlockAlgebra<S>&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
