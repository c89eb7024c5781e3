#include "fqg/qfamily.hpp"

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

template <Scalar S>
Check columns_equal(std::string name, const LinearMap<S>& a, const LinearMap<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError(name + ": shape mismatch");
  return sweep(std::move(name), a.cols(),
               [&](std::size_t c) { return unless(vectors_equal<S>(a.column(c), b.column(c)), {L(c)}); });
}

template <Scalar S>
std::vector<Element<S>> columns_of(const LinearMap<S>& m) {
  std::vector<Element<S>> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m.column(c);
  return out;
}

// Folds the failing checks of a sub-report into one check.
Check fold(std::string name, const Report& r) {
  Check c{std::move(name), true, {}, {}, 0};
  for (const auto& v : r.checks()) {
    if (v.pass) continue;
    if (c.pass) c.witness = v.witness;
    c.pass = false;
    c.failures += v.failures;
    c.detail += (c.detail.empty() ? "" : ", ") + v.name;
  }
  return c;
}

// (φ⊗id)∘α for φ: A → V, as a (dim V · dim B) x dim A map.
template <Scalar S>
LinearMap<S> on_first_leg(const LinearMap<S>& phi, const LinearMap<S>& alpha, std::size_t nb) {
  return apply_to_factor<S>({phi.cols(), nb}, 0, phi, alpha);
}

// φ ⊗ 1_B as a map A → A⊗B, for φ a functional or an operator.
template <Scalar S>
LinearMap<S> tensor_unit(const LinearMap<S>& phi, const StarAlgebra<S>& b) {
  LinearMap<S> out(phi.rows() * b.dim(), phi.cols());
  for (std::size_t c = 0; c < phi.cols(); ++c) out.set_column(c, tensor_vectors<S>(phi.column(c), b.unit()));
  return out;
}

}  // namespace

template <Scalar S>
void check_family_shape(const QuantumFamily<S>& qf) {
  if (!qf.source || !qf.target) throw InvalidStructure("family " + qf.label + " has no source or target");
  const std::size_t na = qf.G().dim(), nb = qf.B().dim();
  if (qf.alpha.rows() != na * nb || qf.alpha.cols() != na) {
    throw DimensionError("family " + qf.label + ": alpha is " + std::to_string(qf.alpha.rows()) + "x" +
                         std::to_string(qf.alpha.cols()) + ", expected " + std::to_string(na * nb) + "x" +
                         std::to_string(na));
  }
  if (qf.hopf_on_B) {
    const auto& h = *qf.hopf_on_B;
    if (h.coproduct.rows() != nb * nb || h.coproduct.cols() != nb || h.counit.rows() != 1 || h.counit.cols() != nb)
      throw DimensionError("family " + qf.label + ": Hopf data on B has the wrong shape");
  }
}

template <Scalar S>
QuantumFamily<S> identity_family(GroupPtr<S> g) {
  auto b = std::make_shared<const StarAlgebra<S>>(scalar_algebra<S>());
  auto alpha = LinearMap<S>::identity(g->dim());
  alpha.relabel(g->label() + "⊗ℂ", g->label());
  HopfData<S> hopf{LinearMap<S>::identity(1), LinearMap<S>::identity(1)};
  std::string label = "id(" + g->label() + ")";
  return QuantumFamily<S>{std::move(g), std::move(b), std::move(alpha), std::move(hopf), std::move(label)};
}

template <Scalar S>
QuantumFamily<S> counit_family(GroupPtr<S> g) {
  auto b = std::make_shared<const StarAlgebra<S>>(scalar_algebra<S>());
  const std::size_t n = g->dim();
  LinearMap<S> alpha(n, n, g->label() + "⊗ℂ", g->label());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) alpha(r, c) = g->counit(0, c) * g->A().unit()[r];
  std::string label = "counit(" + g->label() + ")";
  return QuantumFamily<S>{std::move(g), std::move(b), std::move(alpha), std::nullopt, std::move(label)};
}

template <Scalar S>
Report hom_checks(const StarAlgebra<S>& a, const StarAlgebra<S>& b, const LinearMap<S>& phi) {
  const std::size_t na = a.dim();
  if (phi.rows() != na * b.dim() || phi.cols() != na) throw DimensionError("hom_checks: map does not go A → A⊗B");
  Report report;
  const auto cols = columns_of(phi);
  const auto one = tensor_vectors<S>(a.unit(), b.unit());
  const auto image_of_one = phi.apply(a.unit());
  const std::size_t at = first_difference<S>(image_of_one, one);
  report.add(Check{"unital", at == one.size(), at == one.size() ? std::vector<long>{} : std::vector<long>{L(at)},
                   {}, at == one.size() ? 0u : 1u});
  report.add(sweep("multiplicative", na * na, [&](std::size_t p) {
    const std::size_t i = p / na, j = p % na;
    Element<S> lhs(phi.rows());
    for (const auto& t : a.product(i, j))
      for (std::size_t r = 0; r < phi.rows(); ++r) lhs[r] += t.coeff * cols[t.index][r];
    return unless(vectors_equal<S>(lhs, tensor_multiply<S>(a, b, cols[i], cols[j])), {L(i), L(j)});
  }));
  report.add(sweep("star", na, [&](std::size_t i) {
    const auto lhs = phi.apply(a.star(a.basis(i)));
    return unless(vectors_equal<S>(lhs, tensor_star<S>(a, b, cols[i])), {L(i)});
  }));
  return report;
}

template <Scalar S>
Check unital_star_hom(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  return fold("unital_star_hom", hom_checks(qf.G().A(), qf.B(), qf.alpha));
}

template <Scalar S>
Check podles(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  const auto& a = qf.G().A();
  const auto& b = qf.B();
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<Element<S>> span(na * nb), slices(na * nb);
  parallel_for(na * nb, [&](std::size_t p) {
    const std::size_t i = p / nb, j = p % nb;
    const auto col = qf.alpha.column(i);
    span[p] = tensor_multiply<S>(a, b, col, tensor_vectors<S>(a.unit(), b.basis(j)));
    Element<S> slice(na);
    for (std::size_t r = 0; r < na; ++r) slice[r] = col[r * nb + j];
    slices[p] = std::move(slice);
  });
  const std::size_t span_rank = rank_of_span(span);
  const std::size_t slice_rank = rank_of_span(slices);
  const bool pass = span_rank == na * nb;
  Check c{"podles", pass, {}, {}, pass ? 0u : 1u};
  if (!pass) c.witness = {L(span_rank), L(na * nb)};
  c.detail = "span rank " + std::to_string(span_rank) + " of " + std::to_string(na * nb) + ", slice rank " +
             std::to_string(slice_rank) + " of " + std::to_string(na);
  return c;
}

template <Scalar S>
Report check_family(const QuantumFamily<S>& qf) {
  Report report(qf.label);
  report.add(unital_star_hom(qf));
  report.add(podles(qf));
  return report;
}

template <Scalar S>
Check conv_product(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  const auto conv = convolution_algebra(qf.G());
  const auto& b = qf.B();
  const std::size_t na = conv.dim();
  const auto cols = columns_of(qf.alpha);
  return sweep("conv_product", na * na, [&](std::size_t p) {
    const std::size_t i = p / na, j = p % na;
    const auto lhs = qf.alpha.apply(conv.multiply(conv.basis(i), conv.basis(j)));
    return unless(vectors_equal<S>(lhs, tensor_multiply<S>(conv, b, cols[i], cols[j])), {L(i), L(j)});
  });
}

template <Scalar S>
Check conv_adjoint_preserved(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  const auto& g = qf.G();
  const auto conv = convolution_algebra(g);
  return sweep("conv_adjoint", g.dim(), [&](std::size_t i) {
    const auto lhs = qf.alpha.apply(conv_adjoint<S>(g, g.A().basis(i)));
    return unless(vectors_equal<S>(lhs, tensor_star<S>(conv, qf.B(), qf.alpha.column(i))), {L(i)});
  });
}

template <Scalar S>
Check haar_element_preserved(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  const auto lhs = qf.alpha.apply(qf.G().haar_element);
  const auto rhs = tensor_vectors<S>(qf.G().haar_element, qf.B().unit());
  const std::size_t at = first_difference<S>(lhs, rhs);
  const bool pass = at == lhs.size();
  return Check{"haar_element", pass, pass ? std::vector<long>{} : std::vector<long>{L(at)}, {}, pass ? 0u : 1u};
}

template <Scalar S>
Check counit_preserved(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  const auto lhs = on_first_leg(qf.G().counit, qf.alpha, qf.B().dim());
  return columns_equal("counit", lhs, tensor_unit(qf.G().counit, qf.B()));
}

template <Scalar S>
Check haar_state_preserved(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  const auto lhs = on_first_leg(qf.G().haar_state, qf.alpha, qf.B().dim());
  return columns_equal("haar_state", lhs, tensor_unit(qf.G().haar_state, qf.B()));
}

template <Scalar S>
Report check_convolution_preservation(const QuantumFamily<S>& qf) {
  Report report(qf.label);
  report.add(conv_product(qf));
  report.add(conv_adjoint_preserved(qf));
  report.add(haar_element_preserved(qf));
  report.add(counit_preserved(qf));
  report.add(haar_state_preserved(qf));
  return report;
}

template <Scalar S>
LinearMap<S> hat_by_fourier_inverse(const DualPair<S>& p, const LinearMap<S>& alpha) {
  const std::size_t na = p.primal->dim();
  if (alpha.cols() != na || alpha.rows() % na != 0) throw DimensionError("hat: alpha does not fit the quantum group");
  return on_first_leg(p.fourier, alpha, alpha.rows() / na) * p.fourier_inverse;
}

template <Scalar S>
LinearMap<S> hat_by_definition(const DualPair<S>& p, const LinearMap<S>& alpha) {
  const std::size_t na = p.primal->dim();
  if (alpha.cols() != na || alpha.rows() % na != 0) throw DimensionError("hat: alpha does not fit the quantum group");
  const S h_eta = evaluate<S>(p.primal->haar_state, p.primal->haar_element);
  return (S(1) / h_eta) * (on_first_leg(p.fourier, alpha, alpha.rows() / na) * p.fourier_dual * p.dual->antipode);
}

template <Scalar S>
QuantumFamily<S> hat(const DualPair<S>& p, const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  if (p.primal != qf.source && !(*p.primal == qf.G()))
    throw InvalidStructure("hat: dual pair does not belong to the source of " + qf.label);
  auto by_inverse = hat_by_fourier_inverse(p, qf.alpha);
  if (!(by_inverse == hat_by_definition(p, qf.alpha)))
    throw InvalidStructure("hat: the two Fourier formulas disagree on " + qf.label);
  by_inverse.relabel(p.dual->label() + "⊗" + qf.B().label(), p.dual->label());
  return QuantumFamily<S>{p.dual, qf.target, std::move(by_inverse), qf.hopf_on_B, "hat(" + qf.label + ")"};
}

template <Scalar S>
std::vector<Equivalence> dual_equivalences(const DualPair<S>& p, const QuantumFamily<S>& qf) {
  const auto qh = hat(p, qf);
  const auto hom = hom_checks(qh.G().A(), qh.B(), qh.alpha);
  return {
      {"multiplicative", hom.passed("multiplicative"), conv_product(qf).pass},
      {"star", hom.passed("star"), conv_adjoint_preserved(qf).pass},
      {"unital", hom.passed("unital"), haar_element_preserved(qf).pass},
      {"haar_state", haar_state_preserved(qh).pass, counit_preserved(qf).pass},
  };
}

template <Scalar S>
Report verify_dual_equivalences(const DualPair<S>& p, const QuantumFamily<S>& qf) {
  Report report(qf.label);
  for (const auto& e : dual_equivalences(p, qf)) {
    const auto side = [](bool b) { return b ? "true" : "false"; };
    report.add(e.name, e.agrees(), std::string("dual ") + side(e.dual_side) + ", primal " + side(e.primal_side));
  }
  return report;
}

template <Scalar S>
Report automorphism_conditions(const QuantumFamily<S>& qf) {
  Report report(qf.label);
  report.add(unital_star_hom(qf));
  report.add(podles(qf));
  report.add(conv_product(qf));
  report.add(conv_adjoint_preserved(qf));
  report.add(haar_element_preserved(qf));
  return report;
}

namespace {

template <Scalar S>
LinearMap<S> double_hat_from(const DualPair<S>& p, const QuantumFamily<S>& qf) {
  const auto once = hat(p, qf);
  auto twice = hat(build_dual(once.source), once).alpha;
  twice.relabel(qf.alpha.target_label(), qf.alpha.source_label());
  return twice;
}

}  // namespace

template <Scalar S>
AutomorphismVerdict is_automorphism_family(const QuantumFamily<S>& qf) {
  AutomorphismVerdict v{false, automorphism_conditions(qf)};
  v.is_automorphism = v.report.ok();
  if (!v.is_automorphism) return v;
  const auto p = build_dual(qf.source);
  v.report.add(columns_equal("double_hat", double_hat_from(p, qf), qf.alpha));
  v.report.add(fold("dual_family", automorphism_conditions(hat(p, qf))));
  v.report.add(counit_preserved(qf));
  v.report.add(haar_state_preserved(qf));
  return v;
}

template <Scalar S>
LinearMap<S> double_hat_expected(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  return on_first_leg(qf.G().antipode, qf.alpha, qf.B().dim()) * qf.G().antipode;
}

template <Scalar S>
LinearMap<S> double_hat(const QuantumFamily<S>& qf) {
  return double_hat_from(build_dual(qf.source), qf);
}

template <Scalar S>
QuantumFamily<S> compose(const QuantumFamily<S>& beta, const QuantumFamily<S>& gamma) {
  check_family_shape(beta);
  check_family_shape(gamma);
  if (beta.source != gamma.source && !(beta.G() == gamma.G()))
    throw InvalidStructure("compose: " + beta.label + " and " + gamma.label + " act on different quantum groups");
  const std::size_t na = beta.G().dim();
  auto target = std::make_shared<const StarAlgebra<S>>(tensor_algebra(beta.B(), gamma.B()));
  auto alpha = apply_to_factor<S>({na, gamma.B().dim()}, 0, beta.alpha, gamma.alpha);
  alpha.relabel(beta.G().label() + "⊗" + target->label(), beta.G().label());
  return QuantumFamily<S>{beta.source, std::move(target), std::move(alpha), std::nullopt,
                          "compose(" + beta.label + ", " + gamma.label + ")"};
}

template <Scalar S>
Report check_action(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  if (!qf.hopf_on_B) throw InvalidStructure("check_action: " + qf.label + " has no Hopf structure on B");
  const auto& [delta, eps] = *qf.hopf_on_B;
  const std::size_t na = qf.G().dim(), nb = qf.B().dim();
  Report report(qf.label);
  report.add(columns_equal("hopf_on_B.coassociativity", apply_to_factor<S>({nb, nb}, 0, delta, delta),
                           apply_to_factor<S>({nb, nb}, 1, delta, delta)));
  const auto id_b = LinearMap<S>::identity(nb);
  report.add(columns_equal("hopf_on_B.counit_left", apply_to_factor<S>({nb, nb}, 0, eps, delta), id_b));
  report.add(columns_equal("hopf_on_B.counit_right", apply_to_factor<S>({nb, nb}, 1, eps, delta), id_b));
  report.add(columns_equal("action_equation", apply_to_factor<S>({na, nb}, 1, delta, qf.alpha),
                           apply_to_factor<S>({na, nb}, 0, qf.alpha, qf.alpha)));
  report.add(columns_equal("action_counit", apply_to_factor<S>({na, nb}, 1, eps, qf.alpha),
                           LinearMap<S>::identity(na)));
  return report;
}

template <Scalar S>
Slices<S> slice_commutative(const QuantumFamily<S>& qf) {
  check_family_shape(qf);
  if (!is_point_basis(qf.B()))
    throw InvalidStructure("slice_commutative: " + qf.B().label() + " is not commutative in a point basis");
  const auto& g = qf.G();
  const std::size_t na = g.dim(), nb = qf.B().dim();
  Slices<S> out{std::vector<LinearMap<S>>(nb), Report(qf.label)};
  for (std::size_t x = 0; x < nb; ++x) {
    LinearMap<S> psi(na, na, g.label(), g.label());
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t c = 0; c < na; ++c) psi(r, c) = qf.alpha(r * nb + x, c);
    out.maps[x] = std::move(psi);
  }
  out.report.add(sweep("hopf_automorphism", nb, [&](std::size_t x) {
    return unless(is_hopf_isomorphism(g, g, out.maps[x]).ok(), {L(x)});
  }));
  return out;
}

#define FQG_INSTANTIATE(S)                                                                             \
  template void check_family_shape<S>(const QuantumFamily<S>&);                                        \
  template QuantumFamily<S> identity_family<S>(GroupPtr<S>);                                           \
  template QuantumFamily<S> counit_family<S>(GroupPtr<S>);                                             \
  template Report hom_checks<S>(const StarAlgebra<S>&, const StarAlgebra<S>&, const LinearMap<S>&);    \
  template Check unital_star_hom<S>(const QuantumFamily<S>&);                                          \
  template Check podles<S>(const QuantumFamily<S>&);                                                   \
  template Report check_family<S>(const QuantumFamily<S>&);                                            \
  template Check conv_product<S>(const QuantumFamily<S>&);                                             \
  template Check conv_adjoint_preserved<S>(const QuantumFamily<S>&);                                   \
  template Check haar_element_preserved<S>(const QuantumFamily<S>&);                                   \
  template Check counit_preserved<S>(const QuantumFamily<S>&);                                         \
  template Check haar_state_preserved<S>(const QuantumFamily<S>&);                                     \
  template Report check_convolution_preservation<S>(const QuantumFamily<S>&);                          \
  template LinearMap<S> hat_by_fourier_inverse<S>(const DualPair<S>&, const LinearMap<S>&);            \
  template LinearMap<S> hat_by_definition<S>(const DualPair<S>&, const LinearMap<S>&);                 \
  template QuantumFamily<S> hat<S>(const DualPair<S>&, const QuantumFamily<S>&);                       \
  template std::vector<Equivalence> dual_equivalences<S>(const DualPair<S>&, const QuantumFamily<S>&); \
  template Report verify_dual_equivalences<S>(const DualPair<S>&, const QuantumFamily<S>&);            \
  template Report automorphism_conditions<S>(const QuantumFamily<S>&);                                 \
  template AutomorphismVerdict is_automorphism_family<S>(const QuantumFamily<S>&);                     \
  template LinearMap<S> double_hat_expected<S>(const QuantumFamily<S>&);                               \
  template LinearMap<S> double_hat<S>(const QuantumFamily<S>&);                                        \
  template QuantumFamily<S> compose<S>(const QuantumFamily<S>&, const QuantumFamily<S>&);              \
  template Report check_action<S>(const QuantumFamily<S>&);                                            \
  template Slices<S> slice_commutative<S>(const QuantumFamily<S>&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
