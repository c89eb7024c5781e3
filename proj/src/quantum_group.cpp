#include "fqg/quantum_group.hpp"

#include "fqg/error.hpp"
#include "fqg/linalg.hpp"
#include "fqg/parallel.hpp"

namespace fqg {

namespace {

long L(std::size_t v) { return static_cast<long>(v); }

using Witness = std::optional<std::vector<long>>;

template <Scalar S>
Witness unless(bool ok, std::vector<long> w) {
  if (ok) return std::nullopt;
  return w;
}

template <Scalar S>
Element<S> unit_times(const S& s, const Element<S>& unit) {
  return scaled<S>(s, unit);
}

// m(S⊗id)Δ(e_a) or m(id⊗S)Δ(e_a), depending on `left`.
template <Scalar S>
Element<S> antipode_convolution(const QuantumGroup<S>& g, const std::vector<Element<S>>& s_basis,
                                const std::vector<Term<S>>& delta, bool left) {
  const std::size_t n = g.dim();
  Element<S> out(n);
  for (const auto& t : delta) {
    const std::size_t i = t.index / n, j = t.index % n;
    const auto p = left ? g.A().multiply(s_basis[i], g.A().basis(j)) : g.A().multiply(g.A().basis(i), s_basis[j]);
    for (std::size_t k = 0; k < n; ++k)
      if (!p[k].is_zero()) out[k] += t.coeff * p[k];
  }
  return out;
}

}  // namespace

template <Scalar S>
QuantumGroup<S> make_quantum_group(AlgebraPtr<S> algebra, LinearMap<S> coproduct, LinearMap<S> counit,
                                   LinearMap<S> antipode, std::optional<LinearMap<S>> haar_state,
                                   std::optional<Element<S>> haar_element) {
  if (!algebra) throw InvalidStructure("quantum group without an algebra");
  const std::size_t n = algebra->dim();
  const std::string& a = algebra->label();
  if (coproduct.rows() != n * n || coproduct.cols() != n) throw DimensionError("coproduct must be dim^2 x dim");
  if (counit.rows() != 1 || counit.cols() != n) throw DimensionError("counit must be 1 x dim");
  if (antipode.rows() != n || antipode.cols() != n) throw DimensionError("antipode must be dim x dim");
  if (haar_state && (haar_state->rows() != 1 || haar_state->cols() != n))
    throw DimensionError("haar_state must be 1 x dim");
  if (haar_element && haar_element->size() != n) throw DimensionError("haar_element must have length dim");

  coproduct.relabel(a + "⊗" + a, a);
  counit.relabel("ℂ", a);
  antipode.relabel(a, a);
  LinearMap<S> h = haar_state ? std::move(*haar_state) : solve_haar_state(*algebra, coproduct);
  h.relabel("ℂ", a);
  Element<S> eta = haar_element ? std::move(*haar_element) : solve_haar_element(*algebra, counit);
  return QuantumGroup<S>{std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode),
                         std::move(h), std::move(eta)};
}

template <Scalar S>
std::vector<Element<S>> haar_state_solutions(const StarAlgebra<S>& a, const LinearMap<S>& coproduct) {
  const std::size_t n = a.dim();
  // Row (c, i): Σ_j D[(i,j),c] h_j - unit_i h_c = 0.
  LinearMap<S> system(n * n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = c * n + i;
      for (std::size_t j = 0; j < n; ++j) system(r, j) = coproduct(i * n + j, c);
      system(r, c) -= a.unit()[i];
    }
  return nullspace(system);
}

template <Scalar S>
LinearMap<S> solve_haar_state(const StarAlgebra<S>& a, const LinearMap<S>& coproduct) {
  auto sols = haar_state_solutions(a, coproduct);
  if (sols.size() != 1) {
    throw InvalidStructure("Haar state: invariance system has a solution space of dimension " +
                           std::to_string(sols.size()) + ", expected 1");
  }
  const S norm = dot<S>(sols[0], a.unit());
  if (norm.is_zero()) throw InvalidStructure("Haar state: invariant functional vanishes on the unit");
  return LinearMap<S>::functional(scaled<S>(S(1) / norm, sols[0]), a.label());
}

template <Scalar S>
std::vector<Element<S>> haar_element_solutions(const StarAlgebra<S>& a, const LinearMap<S>& counit) {
  const std::size_t n = a.dim();
  // Row (c, k): Σ_m η_m (e_c e_m)_k - ε(e_c) η_k = 0.
  LinearMap<S> system(n * n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& t : a.product(c, m)) system(c * n + t.index, m) += t.coeff;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < n; ++k) system(c * n + k, k) -= counit(0, c);
  return nullspace(system);
}

template <Scalar S>
Element<S> solve_haar_element(const StarAlgebra<S>& a, const LinearMap<S>& counit) {
  auto sols = haar_element_solutions(a, counit);
  if (sols.size() != 1) {
    throw InvalidStructure("Haar element: solution space has dimension " + std::to_string(sols.size()) +
                           ", expected 1");
  }
  const S e = evaluate<S>(counit, sols[0]);
  if (e.is_zero()) throw InvalidStructure("Haar element: counit vanishes on the invariant element");
  return scaled<S>(S(1) / e, sols[0]);
}

template <Scalar S>
LinearMap<S> haar_pairing(const QuantumGroup<S>& g) {
  const std::size_t n = g.dim();
  LinearMap<S> f(n, n, "Â", g.label());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : g.A().product(i, j)) f(i, j) += t.coeff * g.haar_state(0, t.index);
  return f;
}

template <Scalar S>
LinearMap<S> haar_gram(const QuantumGroup<S>& g) {
  const std::size_t n = g.dim();
  LinearMap<S> gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto si = g.A().star(g.A().basis(i));
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = evaluate<S>(g.haar_state, g.A().multiply(si, g.A().basis(j)));
  }
  return gram;
}

template <Scalar S>
Report verify_quantum_group(const QuantumGroup<S>& g) {
  Report report("quantum group " + g.label());
  const auto& A = g.A();
  const std::size_t n = g.dim();
  report.merge(verify_star_algebra(A), "algebra.");

  const auto delta = sparse_columns(g.coproduct);
  std::vector<Element<S>> d(n), s_basis(n);
  for (std::size_t k = 0; k < n; ++k) {
    d[k] = g.coproduct.column(k);
    s_basis[k] = g.antipode.column(k);
  }
  const Dims nn{n, n};
  const auto& one = A.unit();
  auto eps = [&](std::span<const S> x) { return evaluate<S>(g.counit, x); };
  auto h = [&](std::span<const S> x) { return evaluate<S>(g.haar_state, x); };

  report.add(sweep("coassociativity", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(apply_to_factor<S>(nn, 0, g.coproduct, d[k]),
                                      apply_to_factor<S>(nn, 1, g.coproduct, d[k])),
                     {L(k)});
  }));
  report.add(sweep("counit_left", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(apply_to_factor<S>(nn, 0, g.counit, d[k]), A.basis(k)), {L(k)});
  }));
  report.add(sweep("counit_right", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(apply_to_factor<S>(nn, 1, g.counit, d[k]), A.basis(k)), {L(k)});
  }));

  const auto d_one = g.coproduct.apply(one);
  report.add("coproduct_unital", vectors_equal<S>(d_one, tensor_vectors<S>(one, one)));
  report.add(sweep("coproduct_multiplicative", n * n, [&](std::size_t p) {
    const std::size_t i = p / n, j = p % n;
    const auto lhs = g.coproduct.apply(A.multiply(A.basis(i), A.basis(j)));
    return unless<S>(vectors_equal<S>(lhs, tensor_multiply<S>(A, A, d[i], d[j])), {L(i), L(j)});
  }));
  report.add(sweep("coproduct_star", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(g.coproduct.apply(A.star(A.basis(k))), tensor_star<S>(A, A, d[k])), {L(k)});
  }));

  report.add("counit_unital", eps(one) == S(1));
  report.add(sweep("counit_multiplicative", n * n, [&](std::size_t p) {
    const std::size_t i = p / n, j = p % n;
    return unless<S>(eps(A.multiply(A.basis(i), A.basis(j))) == g.counit(0, i) * g.counit(0, j), {L(i), L(j)});
  }));
  report.add(sweep("counit_star", n, [&](std::size_t k) {
    return unless<S>(eps(A.star(A.basis(k))) == g.counit(0, k).conj(), {L(k)});
  }));

  report.add(sweep("antipode_left", n, [&](std::size_t k) {
    const auto lhs = antipode_convolution(g, s_basis, delta[k], true);
    return unless<S>(vectors_equal<S>(lhs, unit_times(g.counit(0, k), one)), {L(k)});
  }));
  report.add(sweep("antipode_right", n, [&](std::size_t k) {
    const auto lhs = antipode_convolution(g, s_basis, delta[k], false);
    return unless<S>(vectors_equal<S>(lhs, unit_times(g.counit(0, k), one)), {L(k)});
  }));
  report.add(sweep("antipode_involutive", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(g.antipode.apply(s_basis[k]), A.basis(k)), {L(k)});
  }));
  report.add(sweep("antipode_star", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(g.antipode.apply(A.star(A.basis(k))), A.star(s_basis[k])), {L(k)});
  }));

  report.add("haar_normalized", h(one) == S(1));
  report.add(sweep("haar_left_invariant", n, [&](std::size_t k) {
    const auto lhs = apply_to_factor<S>(nn, 0, g.haar_state, d[k]);
    return unless<S>(vectors_equal<S>(lhs, unit_times(g.haar_state(0, k), one)), {L(k)});
  }));
  report.add(sweep("haar_right_invariant", n, [&](std::size_t k) {
    const auto lhs = apply_to_factor<S>(nn, 1, g.haar_state, d[k]);
    return unless<S>(vectors_equal<S>(lhs, unit_times(g.haar_state(0, k), one)), {L(k)});
  }));
  report.add(sweep("haar_tracial", n * n, [&](std::size_t p) {
    const std::size_t i = p / n, j = p % n;
    return unless<S>(h(A.multiply(A.basis(i), A.basis(j))) == h(A.multiply(A.basis(j), A.basis(i))), {L(i), L(j)});
  }));
  report.add(sweep("haar_antipode_invariant", n, [&](std::size_t k) {
    return unless<S>(h(s_basis[k]) == g.haar_state(0, k), {L(k)});
  }));
  {
    const auto gram = haar_gram(g);
    const bool herm = is_hermitian(gram);
    report.add("haar_faithful_positive", herm && is_positive_definite(gram),
               herm ? "leading principal minors of [h(e_i* e_j)]" : "Gram matrix is not Hermitian");
  }
  {
    const auto sols = haar_state_solutions(A, g.coproduct);
    bool unique = sols.size() == 1;
    if (unique) {
      const S norm = dot<S>(sols[0], one);
      unique = !norm.is_zero() && vectors_equal<S>(scaled<S>(S(1) / norm, sols[0]), g.haar_state.row(0));
    }
    report.add("haar_state_matches_solver", unique,
               "invariance solution space dimension " + std::to_string(sols.size()));
  }

  const auto& eta = g.haar_element;
  report.add("haar_element_counit", eps(eta) == S(1));
  report.add(sweep("haar_element_integral", n, [&](std::size_t k) {
    return unless<S>(vectors_equal<S>(A.multiply(A.basis(k), eta), scaled<S>(g.counit(0, k), eta)), {L(k)});
  }));
  {
    const auto sols = haar_element_solutions(A, g.counit);
    report.add("haar_element_unique", sols.size() == 1,
               "solution space dimension " + std::to_string(sols.size()));
  }
  report.add("haar_of_haar_element", h(eta) == S::ratio(1, L(n)), "h(η) = " + h(eta).to_string());
  return report;
}

template <Scalar S>
Report check_hw_identity(const QuantumGroup<S>& g) {
  Report report("HW identity " + g.label());
  const std::size_t n = g.dim();
  const auto f = haar_pairing(g);
  const auto delta = sparse_columns(g.coproduct);
  report.add(sweep("hw_identity", n * n, [&](std::size_t p) {
    const std::size_t b = p / n, c = p % n;
    // Σ D[(i,j),b] h(e_j c) e_i  and  Σ D[(i,j),c] h(b e_j) e_i
    Element<S> inner(n), rhs(n);
    for (const auto& t : delta[b]) {
      const S& v = f(t.index % n, c);
      if (!v.is_zero()) inner[t.index / n] += t.coeff * v;
    }
    for (const auto& t : delta[c]) {
      const S& v = f(b, t.index % n);
      if (!v.is_zero()) rhs[t.index / n] += t.coeff * v;
    }
    return unless<S>(vectors_equal<S>(g.antipode.apply(inner), rhs), {L(b), L(c)});
  }));
  return report;
}

template <Scalar S>
Element<S> convolve(const QuantumGroup<S>& g, std::span<const S> a, std::span<const S> b) {
  const std::size_t n = g.dim();
  if (a.size() != n || b.size() != n) throw DimensionError("convolve: element length does not match");
  // t_i = h(S(e_i) a)
  const auto f = haar_pairing(g);
  const auto ta = f.apply(a);
  const auto t = g.antipode.transpose().apply(ta);
  Element<S> out(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (b[c].is_zero()) continue;
    for (std::size_t r = 0; r < n * n; ++r) {
      const S& dv = g.coproduct(r, c);
      if (dv.is_zero()) continue;
      const S& ti = t[r / n];
      if (!ti.is_zero()) out[r % n] += b[c] * dv * ti;
    }
  }
  return out;
}

template <Scalar S>
Element<S> conv_adjoint(const QuantumGroup<S>& g, std::span<const S> a) {
  return g.antipode.apply(g.A().star(a));
}

template <Scalar S>
StarAlgebra<S> convolution_algebra(const QuantumGroup<S>& g) {
  const std::size_t n = g.dim();
  // T[i][a] = h(S(e_i) e_a) = (S^T F)[i][a]
  const auto t = g.antipode.transpose() * haar_pairing(g);
  const auto delta = sparse_columns(g.coproduct);
  std::vector<StructureConstant<S>> constants;
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& d : delta[b]) {
      const std::size_t i = d.index / n, j = d.index % n;
      for (std::size_t a = 0; a < n; ++a)
        if (!t(i, a).is_zero()) constants.push_back({a, b, j, d.coeff * t(i, a)});
    }
  const S h_eta = evaluate<S>(g.haar_state, g.haar_element);
  if (h_eta.is_zero()) throw InvalidStructure("convolution algebra: h(η) = 0");
  auto unit = scaled<S>(S(1) / h_eta, g.haar_element);
  // e_i• = S(St e_i)
  auto star = g.antipode * g.A().star_matrix();
  return StarAlgebra<S>::from_structure_constants(n, constants, std::move(unit), std::move(star),
                                                  "(" + g.label() + ", ⋆)");
}

template <Scalar S>
bool is_star_homomorphism(const StarAlgebra<S>& a, const StarAlgebra<S>& b, const LinearMap<S>& phi) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim()) return false;
  if (!vectors_equal<S>(phi.apply(a.unit()), b.unit())) return false;
  std::vector<Element<S>> img(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) img[i] = phi.column(i);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!vectors_equal<S>(phi.apply(a.star(a.basis(i))), b.star(img[i]))) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!vectors_equal<S>(phi.apply(a.multiply(a.basis(i), a.basis(j))), b.multiply(img[i], img[j]))) return false;
  }
  return true;
}

template <Scalar S>
bool intertwines_coproducts(const QuantumGroup<S>& a, const QuantumGroup<S>& b, const LinearMap<S>& phi) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim()) return false;
  const Dims legs{a.dim(), a.dim()};
  const Dims half{b.dim(), a.dim()};
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const auto once = apply_to_factor<S>(legs, 0, phi, a.coproduct.column(c));
    if (!vectors_equal<S>(apply_to_factor<S>(half, 1, phi, once), b.coproduct.apply(phi.column(c)))) return false;
  }
  return true;
}

template <Scalar S>
Report is_hopf_isomorphism(const QuantumGroup<S>& a, const QuantumGroup<S>& b, const LinearMap<S>& phi) {
  Report report("Hopf isomorphism " + a.label() + " → " + b.label());
  const bool shape = phi.rows() == b.dim() && phi.cols() == a.dim();
  report.add("shape", shape);
  if (!shape) return report;
  report.add("bijective", a.dim() == b.dim() && rank(phi) == a.dim());
  report.add("star_homomorphism", is_star_homomorphism(a.A(), b.A(), phi));
  report.add("coproduct", intertwines_coproducts(a, b, phi));
  report.add("counit", b.counit * phi == a.counit);
  report.add("antipode", b.antipode * phi == phi * a.antipode);
  report.add("haar_state", b.haar_state * phi == a.haar_state);
  return report;
}

#define FQG_INSTANTIATE(S)                                                                                      \
  template QuantumGroup<S> make_quantum_group<S>(AlgebraPtr<S>, LinearMap<S>, LinearMap<S>, LinearMap<S>,        \
                                                 std::optional<LinearMap<S>>, std::optional<Element<S>>);       \
  template Report verify_quantum_group<S>(const QuantumGroup<S>&);                                             \
  template std::vector<Element<S>> haar_state_solutions<S>(const StarAlgebra<S>&, const LinearMap<S>&);        \
  template LinearMap<S> solve_haar_state<S>(const StarAlgebra<S>&, const LinearMap<S>&);                       \
  template std::vector<Element<S>> haar_element_solutions<S>(const StarAlgebra<S>&, const LinearMap<S>&);      \
  template Element<S> solve_haar_element<S>(const StarAlgebra<S>&, const LinearMap<S>&);                       \
  template Report check_hw_identity<S>(const QuantumGroup<S>&);                                                \
  template LinearMap<S> haar_pairing<S>(const QuantumGroup<S>&);                                               \
  template LinearMap<S> haar_gram<S>(const QuantumGroup<S>&);                                                  \
  template Element<S> convolve<S>(const QuantumGroup<S>&, std::span<const S>, std::span<const S>);             \
  template Element<S> conv_adjoint<S>(const QuantumGroup<S>&, std::span<const S>);                             \
  template StarAlgebra<S> convolution_algebra<S>(const QuantumGroup<S>&);                                      \
  template bool is_star_homomorphism<S>(const StarAlgebra<S>&, const StarAlgebra<S>&, const LinearMap<S>&);    \
  template bool intertwines_coproducts<S>(const QuantumGroup<S>&, const QuantumGroup<S>&, const LinearMap<S>&); \
  template Report is_hopf_isomorphism<S>(const QuantumGroup<S>&, const QuantumGroup<S>&, const LinearMap<S>&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
