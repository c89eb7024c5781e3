#include <doctest.h>

#include "fqg/classical_aut.hpp"
#include "fqg/selftest.hpp"
#include "gen.hpp"

using namespace fqg;

namespace {

GroupPtr<Exact> shared(const std::string& name, GroupKind kind) {
  return std::make_shared<const QuantumGroup<Exact>>(build_quantum_group<Exact>(named_group(name), kind));
}

QuantumFamily<Exact> random_family(gen::Gen& rng, GroupPtr<Exact> g, std::size_t nb) {
  auto b = std::make_shared<const StarAlgebra<Exact>>(make_block_algebra<Exact>(std::vector<std::size_t>(nb, 1)).algebra);
  auto alpha = rng.matrix(g->dim() * nb, g->dim());
  return QuantumFamily<Exact>{std::move(g), std::move(b), std::move(alpha), std::nullopt, "random"};
}

}  // namespace

TEST_CASE("both hat formulas agree for arbitrary linear maps") {
  gen::Gen rng(51);
  for (int trial = 0; trial < 15; ++trial) {
    const auto kind = rng.coin() ? GroupKind::function : GroupKind::group;
    const auto g = shared(rng.small_group(), kind);
    const auto p = build_dual(g);
    const auto qf = random_family(rng, g, 1 + rng.index(3));
    CHECK(hat_by_definition(p, qf.alpha) == hat_by_fourier_inverse(p, qf.alpha));
    CHECK(double_hat(qf) == double_hat_expected(qf));
    for (const auto& e : dual_equivalences(p, qf)) {
      CAPTURE(e.name);
      CHECK(e.agrees());
    }
  }
}

TEST_CASE("identity and counit families") {
  const auto f = shared("S3", GroupKind::function);
  const auto id = identity_family(f);
  CHECK(check_family(id).ok());
  CHECK(is_automorphism_family(id).is_automorphism);
  CHECK(check_action(id).ok());

  const auto eps = counit_family(f);
  const auto r = check_family(eps);
  CHECK(r.passed("unital_star_hom"));
  CHECK_FALSE(r.passed("podles"));
  CHECK_FALSE(is_automorphism_family(eps).is_automorphism);
  const auto conv = check_convolution_preservation(eps);
  CHECK(conv.passed("counit"));
  CHECK(conv.passed("conv_adjoint"));
  CHECK_FALSE(conv.passed("conv_product"));
  CHECK_FALSE(conv.passed("haar_element"));
  CHECK_FALSE(conv.passed("haar_state"));
}

TEST_CASE("the counit family has p_{x,y} = δ_{y,e}") {
  for (const char* name : {"Z4", "S3"}) {
    const auto m = extract_matrix(counit_family(shared(name, GroupKind::function)));
    const std::size_t e = m.group.identity();
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = 0; y < m.size(); ++y) CHECK(m(x, y) == Element<Exact>{Exact(y == e ? 1 : 0)});
  }
}

TEST_CASE("hom checks reject perturbed homomorphisms") {
  gen::Gen rng(52);
  const auto uni = universal_classical_family<Exact>(named_group("S3"));
  CHECK(hom_checks(uni.G().A(), uni.B(), uni.alpha).ok());
  for (int trial = 0; trial < 10; ++trial) {
    auto bad = uni;
    const std::size_t r = rng.index(bad.alpha.rows()), c = rng.index(bad.alpha.cols());
    bad.alpha(r, c) += Exact(1 + rng.index(3));
    CHECK_FALSE(hom_checks(bad.G().A(), bad.B(), bad.alpha).ok());
    CHECK_FALSE(is_automorphism_family(bad).is_automorphism);
  }
  auto scaled_family = identity_family(shared("Z3", GroupKind::function));
  scaled_family.alpha = Exact(0, 1) * scaled_family.alpha;
  const auto h = hom_checks(scaled_family.G().A(), scaled_family.B(), scaled_family.alpha);
  CHECK_FALSE(h.passed("unital"));
  CHECK_FALSE(h.passed("multiplicative"));
  CHECK_FALSE(h.passed("star"));
}

TEST_CASE("hat preserves the automorphism verdict") {
  for (const auto& nf : selftest::family_fixtures()) {
    CAPTURE(nf.name);
    const auto h = hat(nf.family);
    CHECK(is_automorphism_family(nf.family).is_automorphism == is_automorphism_family(h).is_automorphism);
  }
}

TEST_CASE("slices of the universal family are the automorphisms") {
  for (const char* name : {"Z5", "K4", "S3"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto auts = enumerate_automorphisms(g);
    const auto sl = slice_commutative(universal_classical_family<Exact>(g));
    CHECK(sl.report.ok());
    REQUIRE(sl.maps.size() == auts.size());
    for (std::size_t k = 0; k < auts.size(); ++k) CHECK(sl.maps[k] == permutation_map<Exact>(auts[k]));
  }
  CHECK_THROWS_AS(slice_commutative(selftest::matrix_embedded_family()), InvalidStructure);
}

TEST_CASE("composition with the identity family and associativity") {
  const auto g = named_group("Z5");
  const auto uni = universal_classical_family<Exact>(g);
  const auto id = identity_family(uni.source);
  CHECK(compose(id, uni).alpha == uni.alpha);
  CHECK(compose(uni, id).alpha == uni.alpha);
  CHECK(is_automorphism_family(compose(uni, uni)).is_automorphism);

  gen::Gen rng(53);
  const auto f = shared("Z3", GroupKind::function);
  const auto a = random_family(rng, f, 2), b = random_family(rng, f, 1), c = random_family(rng, f, 2);
  CHECK(compose(compose(a, b), c).alpha == compose(a, compose(b, c)).alpha);
  CHECK_THROWS_AS(compose(a, random_family(rng, shared("Z3", GroupKind::group), 1)), InvalidStructure);
}

TEST_CASE("action checks") {
  CHECK(check_action(universal_classical_family<Exact>(named_group("D4"))).ok());
  CHECK(check_action(selftest::translation_family(named_group("S3"))).ok());
  CHECK_FALSE(check_action(selftest::broken_action_family(named_group("S3"))).ok());
  CHECK_THROWS_AS(check_action(selftest::matrix_embedded_family()), InvalidStructure);
}
