#include "fqg/fourier.hpp"

#include "fqg/error.hpp"
#include "fqg/linalg.hpp"
#include "fqg/parallel.hpp"

namespace fqg {

namespace {

long L(std::size_t v) { return static_cast<long>(v); }

std::optional<std::vector<long>> unless(bool ok, std::vector<long> w) {
  if (ok) return std::nullopt;
  return w;
}

}  // namespace

template <Scalar S>
DualPair<S> build_dual(GroupPtr<S> g) {
  const auto& A = g->A();
  const std::size_t n = g->dim();
  const std::string label = "dual(" + g->label() + ")";

  auto fourier = haar_pairing(*g).relabel(label, g->label());
  auto inv = inverse(fourier);
  if (!inv) throw InvalidStructure("Fourier transform of " + g->label() + " is singular");
  inv->relabel(g->label(), label);

  // f_i f_j = Σ_k D[(i,j),k] f_k
  std::vector<StructureConstant<S>> constants;
  const auto delta = sparse_columns(g->coproduct);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : delta[k]) constants.push_back({t.index / n, t.index % n, k, t.coeff});
  const auto& st = A.star_matrix();
  auto dual_star = (st.conjugate() * g->antipode).transpose();
  Element<S> dual_unit(g->counit.row(0).begin(), g->counit.row(0).end());
  auto algebra = std::make_shared<const StarAlgebra<S>>(
      StarAlgebra<S>::from_structure_constants(n, constants, std::move(dual_unit), std::move(dual_star), label));

  // Δ̂(f_k)[(i,j)] = m_ijk
  LinearMap<S> coproduct(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : A.product(i, j)) coproduct(i * n + j, t.index) += t.coeff;
  auto counit = LinearMap<S>::functional(A.unit(), label);
  auto antipode = g->antipode.transpose();
  const S h_eta = evaluate<S>(g->haar_state, g->haar_element);
  auto haar_state = h_eta * (g->counit * *inv);
  auto haar_element = fourier.apply(A.unit());

  auto dual = std::make_shared<const QuantumGroup<S>>(make_quantum_group<S>(
      algebra, std::move(coproduct), std::move(counit), std::move(antipode), std::move(haar_state),
      std::move(haar_element)));
  auto fourier_dual = haar_pairing(*dual).relabel(g->label(), label);
  return DualPair<S>{std::move(g), std::move(dual), std::move(fourier), std::move(*inv), std::move(fourier_dual)};
}

template <Scalar S>
Report verify_fourier_identities(const DualPair<S>& p) {
  const auto& g = *p.primal;
  const auto& d = *p.dual;
  const auto& A = g.A();
  const auto& D = d.A();
  const std::size_t n = g.dim();
  Report report("Fourier identities " + g.label());

  report.add("fourier_invertible", rank(p.fourier) == n);

  const auto conv = convolution_algebra(g);
  const auto dual_conv = convolution_algebra(d);
  report.merge(verify_star_algebra(conv), "convolution.");

  const auto& F = p.fourier;
  std::vector<Element<S>> fe(n);
  for (std::size_t i = 0; i < n; ++i) fe[i] = F.column(i);
  const S h_eta = evaluate<S>(g.haar_state, g.haar_element);

  report.add(sweep("convolution_unit", n, [&](std::size_t a) {
    const auto expected = scaled<S>(g.haar_state(0, a), A.unit());
    const bool ok = vectors_equal<S>(conv.multiply(A.unit(), A.basis(a)), expected) &&
                    vectors_equal<S>(conv.multiply(A.basis(a), A.unit()), expected);
    return unless(ok, {L(a)});
  }));
  report.add(sweep("fourier_convolution", n * n, [&](std::size_t q) {
    const std::size_t a = q / n, b = q % n;
    return unless(vectors_equal<S>(F.apply(conv.multiply(A.basis(a), A.basis(b))), D.multiply(fe[a], fe[b])),
                  {L(a), L(b)});
  }));
  report.add(sweep("fourier_star", n, [&](std::size_t b) {
    return unless(vectors_equal<S>(D.star(fe[b]), F.apply(conv.star(A.basis(b)))), {L(b)});
  }));
  report.add("antipode_fourier", d.antipode * F == F * g.antipode);
  report.add(sweep("fourier_product", n * n, [&](std::size_t q) {
    const std::size_t a = q / n, b = q % n;
    const auto lhs = scaled<S>(h_eta, F.apply(A.multiply(A.basis(a), A.basis(b))));
    return unless(vectors_equal<S>(lhs, dual_conv.multiply(fe[b], fe[a])), {L(a), L(b)});
  }));
  report.add(sweep("counit_convolution", n * n, [&](std::size_t q) {
    const std::size_t a = q / n, b = q % n;
    const S lhs = evaluate<S>(g.counit, conv.multiply(A.basis(a), A.basis(b)));
    const S rhs = evaluate<S>(g.haar_state, A.multiply(g.antipode.column(b), A.basis(a)));
    return unless(lhs == rhs, {L(a), L(b)});
  }));
  report.add(sweep("fourier_conv_adjoint", n, [&](std::size_t a) {
    return unless(vectors_equal<S>(dual_conv.star(fe[a]), F.apply(A.star(A.basis(a)))), {L(a)});
  }));

  report.merge(verify_quantum_group(d), "dual.");
  const S dual_h_eta = evaluate<S>(d.haar_state, d.haar_element);
  report.add("dual_haar_of_haar_element", dual_h_eta == h_eta, "ĥ(η̂) = " + dual_h_eta.to_string());
  return report;
}

template <Scalar S>
Report check_iteration_lemma(const DualPair<S>& p) {
  const auto& g = *p.primal;
  const std::size_t n = g.dim();
  Report report("Fourier iteration " + g.label());
  const S h_eta = evaluate<S>(g.haar_state, g.haar_element);
  const auto composed = p.fourier_dual * p.fourier;
  report.add("iterate_is_scaled_antipode", composed == h_eta * g.antipode,
             "h(η) = " + h_eta.to_string());
  report.add("fourth_power", composed * composed == (h_eta * h_eta) * LinearMap<S>::identity(n));
  report.add("haar_of_haar_element", h_eta == S::ratio(1, L(n)));
  return report;
}

template <Scalar S>
Report check_double_dual(const DualPair<S>& p) {
  const auto again = build_dual(p.dual);
  const auto& g = *p.primal;
  const auto& gg = *again.dual;
  Report report("double dual " + g.label());
  report.add("algebra", gg.A() == g.A());
  report.add("coproduct", gg.coproduct == g.coproduct);
  report.add("counit", gg.counit == g.counit);
  report.add("antipode", gg.antipode == g.antipode);
  report.add("haar_state", gg.haar_state == g.haar_state);
  report.add("haar_element", gg.haar_element == g.haar_element);
  report.add("fourier", again.fourier == p.fourier_dual);
  return report;
}

#define FQG_INSTANTIATE(S)                                       \
  template DualPair<S> build_dual<S>(GroupPtr<S>);              \
  template Report verify_fourier_identities<S>(const DualPair<S>&); \
  template Report check_iteration_lemma<S>(const DualPair<S>&);  \
  template Report check_double_dual<S>(const DualPair<S>&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
