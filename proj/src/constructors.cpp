#include "fqg/constructors.hpp"

#include <cmath>
#include <numbers>

#include "fqg/error.hpp"
#include "fqg/fourier.hpp"
#include "fqg/parallel.hpp"

namespace fqg {

GroupKind parse_group_kind(const std::string& text) {
  if (text == "fun" || text == "function") return GroupKind::function;
  if (text == "grp" || text == "group") return GroupKind::group;
  throw ParseError("group kind must be 'fun' or 'grp', got '" + text + "'");
}

const char* group_kind_name(GroupKind kind) { return kind == GroupKind::function ? "fun" : "grp"; }

namespace {

std::string group_label(const FiniteGroup& g) {
  return g.name().empty() ? "G" + std::to_string(g.order()) : g.name();
}

long L(std::size_t v) { return static_cast<long>(v); }

std::optional<std::vector<long>> unless(bool ok, std::vector<long> w) {
  if (ok) return std::nullopt;
  return w;
}

template <Scalar S>
bool cocommutative(const QuantumGroup<S>& g) {
  return flip<S>(g.dim(), g.dim()) * g.coproduct == g.coproduct;
}

}  // namespace

template <Scalar S>
QuantumGroup<S> function_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::string label = "F(" + group_label(g) + ")";
  std::vector<StructureConstant<S>> constants;
  for (std::size_t x = 0; x < n; ++x) constants.push_back({x, x, x, S(1)});
  auto algebra = std::make_shared<const StarAlgebra<S>>(StarAlgebra<S>::from_structure_constants(
      n, constants, Element<S>(n, S(1)), LinearMap<S>::identity(n), label));
  LinearMap<S> coproduct(n * n, n), counit(1, n), antipode(n, n), haar(1, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) coproduct(a * n + b, g.mul(a, b)) = S(1);
  for (std::size_t x = 0; x < n; ++x) {
    antipode(g.inverse(x), x) = S(1);
    haar(0, x) = S::ratio(1, L(n));
  }
  counit(0, g.identity()) = S(1);
  return make_quantum_group<S>(std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode),
                               std::move(haar), basis_vector<S>(n, g.identity()));
}

template <Scalar S>
QuantumGroup<S> group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::string label = "ℂ[" + group_label(g) + "]";
  std::vector<StructureConstant<S>> constants;
  LinearMap<S> star(n, n), coproduct(n * n, n), counit(1, n), antipode(n, n), haar(1, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) constants.push_back({a, b, g.mul(a, b), S(1)});
    star(g.inverse(a), a) = S(1);
    coproduct(a * n + a, a) = S(1);
    counit(0, a) = S(1);
    antipode(g.inverse(a), a) = S(1);
  }
  haar(0, g.identity()) = S(1);
  auto algebra = std::make_shared<const StarAlgebra<S>>(StarAlgebra<S>::from_structure_constants(
      n, constants, basis_vector<S>(n, g.identity()), std::move(star), label));
  return make_quantum_group<S>(std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode),
                               std::move(haar), Element<S>(n, S::ratio(1, L(n))));
}

template <Scalar S>
std::optional<RecoveredGroup> recover_group(const QuantumGroup<S>& q) {
  const std::size_t n = q.dim();
  const auto& A = q.A();
  GroupTable table(n, std::vector<std::size_t>(n, n));
  GroupKind kind;
  if (is_point_basis(A)) {
    kind = GroupKind::function;
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t r = 0; r < n * n; ++r) {
        const S& v = q.coproduct(r, g);
        if (v.is_zero()) continue;
        if (!(v == S(1)) || table[r / n][r % n] != n) return std::nullopt;
        table[r / n][r % n] = g;
      }
  } else {
    kind = GroupKind::group;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& t = A.product(a, b);
        if (t.size() != 1 || !(t[0].coeff == S(1))) return std::nullopt;
        table[a][b] = t[0].index;
      }
  }
  for (const auto& row : table)
    for (auto v : row)
      if (v == n) return std::nullopt;
  std::optional<FiniteGroup> group;
  try {
    group = FiniteGroup::from_table(std::move(table));
  } catch (const InvalidStructure&) {
    return std::nullopt;
  }
  if (!(build_quantum_group<S>(*group, kind) == q)) return std::nullopt;
  return RecoveredGroup{std::move(*group), kind};
}

template <Scalar S>
Report check_fundamental_examples(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const S inv_n = S::ratio(1, L(n));
  auto fun = std::make_shared<const QuantumGroup<S>>(function_algebra<S>(g));
  auto grp = std::make_shared<const QuantumGroup<S>>(group_algebra<S>(g));
  Report report("fundamental examples " + group_label(g));
  const auto fun_conv = convolution_algebra(*fun);
  const auto grp_conv = convolution_algebra(*grp);
  auto e = [&](std::size_t i) { return basis_vector<S>(n, i); };

  report.add(sweep("function_convolution", n * n, [&](std::size_t p) {
    const std::size_t a = p / n, b = p % n;
    return unless(vectors_equal<S>(fun_conv.multiply(e(a), e(b)), scaled<S>(inv_n, e(g.mul(a, b)))), {L(a), L(b)});
  }));
  report.add(sweep("function_conv_adjoint", n, [&](std::size_t a) {
    return unless(vectors_equal<S>(conv_adjoint<S>(*fun, e(a)), e(g.inverse(a))), {L(a)});
  }));
  report.add(sweep("group_convolution", n * n, [&](std::size_t p) {
    const std::size_t a = p / n, b = p % n;
    const auto expected = a == b ? e(b) : Element<S>(n);
    return unless(vectors_equal<S>(grp_conv.multiply(e(a), e(b)), expected), {L(a), L(b)});
  }));
  report.add(sweep("group_conv_adjoint", n, [&](std::size_t a) {
    return unless(vectors_equal<S>(conv_adjoint<S>(*grp, e(a)), e(a)), {L(a)});
  }));

  const auto fd = build_dual<S>(fun);
  const auto& F = fd.fourier;
  const auto& dual = *fd.dual;
  report.add(sweep("function_fourier", n, [&](std::size_t a) {
    return unless(vectors_equal<S>(F.column(a), scaled<S>(inv_n, e(a))), {L(a)});
  }));
  report.add(sweep("function_fourier_product", n * n, [&](std::size_t p) {
    const std::size_t a = p / n, b = p % n;
    const auto lhs = dual.A().multiply(F.column(a), F.column(b));
    return unless(vectors_equal<S>(lhs, scaled<S>(inv_n, F.column(g.mul(a, b)))), {L(a), L(b)});
  }));
  report.add(sweep("function_fourier_coproduct", n, [&](std::size_t a) {
    const auto fa = F.column(a);
    const auto lhs = dual.coproduct.apply(fa);
    // F(δ_g) is |G| times a grouplike functional.
    return unless(vectors_equal<S>(lhs, scaled<S>(S(L(n)), tensor_vectors<S>(fa, fa))), {L(a)});
  }));
  {
    const auto iso = is_hopf_isomorphism(dual, *grp, LinearMap<S>::identity(n));
    report.add("dual_function_algebra_isomorphism", iso.ok(),
               iso.ok() ? "f_g ↦ λ_g, i.e. 𝓕(δ_g) ↦ λ_g/|Γ|" : "failed: " + iso.violations().front().name);
    report.add("dual_function_algebra_coordinates", dual == *grp);
  }

  const auto gd = build_dual<S>(grp);
  report.add(sweep("group_fourier", n, [&](std::size_t a) {
    return unless(vectors_equal<S>(gd.fourier.column(a), e(g.inverse(a))), {L(a)});
  }));
  {
    const auto iso = is_hopf_isomorphism(*gd.dual, *fun, LinearMap<S>::identity(n));
    report.add("dual_group_algebra_isomorphism", iso.ok(),
               iso.ok() ? "f_g ↦ δ_g" : "failed: " + iso.violations().front().name);
  }

  report.add("function_commutative", is_commutative(fun->A()));
  report.add("group_cocommutative", cocommutative(*grp));
  report.add("function_cocommutative_iff_abelian", cocommutative(*fun) == g.is_abelian());
  return report;
}

Report check_pontryagin_cyclic(std::size_t n) {
  const auto z = named_group("Z" + std::to_string(n));
  const auto grp = group_algebra<Approx>(z);
  const auto fun = function_algebra<Approx>(z);
  LinearMap<Approx> phi(n, n, fun.label(), grp.label());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n);
      phi(j, k) = Approx(std::cos(angle), std::sin(angle));
    }
  Report report = is_hopf_isomorphism(grp, fun, phi);
  return report;
}

#define FQG_INSTANTIATE(S)                                                           \
  template QuantumGroup<S> function_algebra<S>(const FiniteGroup&);                 \
  template QuantumGroup<S> group_algebra<S>(const FiniteGroup&);                    \
  template std::optional<RecoveredGroup> recover_group<S>(const QuantumGroup<S>&);  \
  template Report check_fundamental_examples<S>(const FiniteGroup&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
