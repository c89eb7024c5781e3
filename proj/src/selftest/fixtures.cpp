#include <algorithm>
#include <random>

#include "fqg/selftest.hpp"

namespace fqg::selftest {

GroupPtr<Exact> shared_group(const std::string& name, GroupKind kind) {
  return std::make_shared<const QuantumGroup<Exact>>(build_quantum_group<Exact>(named_group(name), kind));
}

Family translation_family(const FiniteGroup& g) {
  auto fun = std::make_shared<const QuantumGroup<Exact>>(function_algebra<Exact>(g));
  const std::size_t n = g.order();
  LinearMap<Exact> alpha(n * n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t h = 0; h < n; ++h) alpha(g.mul(h, y) * n + h, y) = 1;
  return Family{fun, fun->algebra, std::move(alpha), HopfData<Exact>{fun->coproduct, fun->counit},
                "translation(" + g.name() + ")"};
}

Family scaled_identity_family(GroupPtr<Exact> g, const Exact& c) {
  auto qf = identity_family(std::move(g));
  qf.alpha = c * qf.alpha;
  qf.label = c.to_string() + "·" + qf.label;
  return qf;
}

Family grading_family() {
  const auto z4 = named_group("Z4");
  auto source = std::make_shared<const QuantumGroup<Exact>>(group_algebra<Exact>(z4));
  const auto z2 = group_algebra<Exact>(named_group("Z2"));
  LinearMap<Exact> alpha(8, 4);
  for (std::size_t x = 0; x < 4; ++x) alpha(x * 2 + x % 2, x) = 1;
  return Family{std::move(source), z2.algebra, std::move(alpha), HopfData<Exact>{z2.coproduct, z2.counit},
                "grading(ℂ[Z4])"};
}

Family broken_action_family(const FiniteGroup& g) {
  auto qf = universal_classical_family<Exact>(g);
  const std::size_t na = qf.G().dim(), nb = qf.B().dim();
  if (nb < 2) return qf;
  Permutation swap(nb);
  for (std::size_t k = 0; k < nb; ++k) swap[k] = k;
  std::swap(swap[0], swap[1]);
  LinearMap<Exact> alpha(na * nb, na);
  for (std::size_t r = 0; r < na; ++r)
    for (std::size_t k = 0; k < nb; ++k)
      for (std::size_t c = 0; c < na; ++c) alpha(r * nb + swap[k], c) = qf.alpha(r * nb + k, c);
  qf.alpha = std::move(alpha);
  qf.label = "broken_action(" + g.name() + ")";
  return qf;
}

Family matrix_embedded_family() {
  const auto uni = universal_classical_family<Exact>(named_group("Z3"));
  const std::size_t na = uni.G().dim(), nb = uni.B().dim();
  auto m2 = std::make_shared<const StarAlgebra<Exact>>(make_block_algebra<Exact>({nb}).algebra);
  LinearMap<Exact> alpha(na * nb * nb, na);
  for (std::size_t r = 0; r < na; ++r)
    for (std::size_t k = 0; k < nb; ++k)
      for (std::size_t c = 0; c < na; ++c) alpha(r * nb * nb + k * nb + k, c) = uni.alpha(r * nb + k, c);
  return Family{uni.source, std::move(m2), std::move(alpha), std::nullopt, "diagonal_embedding(universal(Z3))"};
}

Family random_linear_family(GroupPtr<Exact> g, unsigned seed) {
  std::mt19937 rng(seed);
  const auto draw = [&] { return static_cast<long>(rng() % 7) - 3; };
  const auto b = function_algebra<Exact>(named_group("Z2"));
  const std::size_t na = g->dim(), nb = b.dim();
  LinearMap<Exact> alpha(na * nb, na);
  for (std::size_t r = 0; r < alpha.rows(); ++r)
    for (std::size_t c = 0; c < na; ++c)
      alpha(r, c) = Exact(mpq_class(draw(), 1 + rng() % 3), mpq_class(draw(), 1 + rng() % 3));
  std::string label = "random" + std::to_string(seed) + "(" + g->label() + ")";
  return Family{std::move(g), b.algebra, std::move(alpha), std::nullopt, std::move(label)};
}

std::vector<NamedFamily> family_fixtures() {
  std::vector<NamedFamily> out;
  const auto add = [&](Family f) { out.push_back({f.label, std::move(f)}); };
  const auto f_z3 = shared_group("Z3", GroupKind::function);
  const auto f_s3 = shared_group("S3", GroupKind::function);
  const auto g_z4 = shared_group("Z4", GroupKind::group);
  add(identity_family(shared_group("Z4", GroupKind::function)));
  add(identity_family(f_s3));
  add(identity_family(g_z4));
  add(identity_family(shared_group("S3", GroupKind::group)));
  for (const char* name : {"Z4", "Z5", "K4", "S3", "D4", "Q8"})
    add(universal_classical_family<Exact>(named_group(name)));
  add(hat(universal_classical_family<Exact>(named_group("S3"))));
  add(matrix_embedded_family());
  add(counit_family(f_s3));
  add(counit_family(g_z4));
  add(scaled_identity_family(f_z3, Exact(0, 1)));
  add(translation_family(named_group("S3")));
  add(grading_family());
  add(broken_action_family(named_group("S3")));
  add(random_linear_family(f_z3, 1));
  add(random_linear_family(shared_group("Z3", GroupKind::group), 2));
  return out;
}

MagicMatrix<Exact> m2_magic_fixture() {
  auto m2 = std::make_shared<const StarAlgebra<Exact>>(make_block_algebra<Exact>({2}).algebra);
  const Exact half = Exact::ratio(1, 2);
  const Element<Exact> q{half, half, half, half};
  const Element<Exact> q_perp{half, -half, -half, half};
  return MagicMatrix<Exact>{named_group("Z2"), GroupKind::function, std::move(m2), {q, q_perp, q_perp, q}};
}

MagicMatrix<Exact> rows_only_stochastic_fixture() {
  auto c2 = function_algebra<Exact>(named_group("Z2")).algebra;
  const Element<Exact> d1{1, 0};
  const Element<Exact> d2{0, 1};
  return MagicMatrix<Exact>{named_group("Z2"), GroupKind::function, std::move(c2), {d1, d2, d1, d2}};
}

std::vector<Permutation> brute_force_automorphisms(const FiniteGroup& g) {
  const std::size_t n = g.order(), e = g.identity();
  std::vector<std::size_t> rest;
  for (std::size_t a = 0; a < n; ++a)
    if (a != e) rest.push_back(a);
  std::vector<Permutation> out;
  do {
    Permutation psi(n);
    psi[e] = e;
    for (std::size_t k = 0, a = 0; a < n; ++a)
      if (a != e) psi[a] = rest[k++];
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = psi[g.mul(a, b)] == g.mul(psi[a], psi[b]);
    if (hom) out.push_back(std::move(psi));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fqg::selftest
