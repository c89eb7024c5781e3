#include <doctest.h>

#include "fqg/constructors.hpp"
#include "gen.hpp"

using namespace fqg;

namespace {

Element<Exact> delta(std::size_t n, std::size_t i) { return basis_vector<Exact>(n, i); }

}  // namespace

TEST_CASE("function and group algebras of the catalog are finite quantum groups") {
  for (const auto& name : catalog_group_names()) {
    CAPTURE(name);
    const auto g = named_group(name);
    for (auto kind : {GroupKind::function, GroupKind::group}) {
      const auto q = build_quantum_group<Exact>(g, kind);
      CHECK(verify_quantum_group(q).ok());
      CHECK(evaluate<Exact>(q.haar_state, q.haar_element) == Exact::ratio(1, static_cast<long>(g.order())));
      const auto back = recover_group(q);
      REQUIRE(back.has_value());
      CHECK(back->kind == kind);
      CHECK(back->group == g);
    }
  }
}

TEST_CASE("Haar state and Haar element are recovered by the solvers") {
  for (const char* name : {"Z4", "S3", "Q8"}) {
    CAPTURE(name);
    for (auto kind : {GroupKind::function, GroupKind::group}) {
      const auto q = build_quantum_group<Exact>(named_group(name), kind);
      CHECK(solve_haar_state(q.A(), q.coproduct) == q.haar_state);
      CHECK(solve_haar_element(q) == q.haar_element);
      CHECK(haar_state_solutions(q.A(), q.coproduct).size() == 1);
      CHECK(haar_element_solutions(q.A(), q.counit).size() == 1);
    }
  }
}

TEST_CASE("convolution on F(Γ) is group multiplication scaled by 1/|Γ|") {
  for (const char* name : {"Z5", "S3", "D4"}) {
    const auto g = named_group(name);
    const auto q = function_algebra<Exact>(g);
    const std::size_t n = g.order();
    const Exact scale = Exact::ratio(1, static_cast<long>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        CHECK(convolve<Exact>(q, delta(n, x), delta(n, y)) == scaled<Exact>(scale, delta(n, g.mul(x, y))));
    for (std::size_t x = 0; x < n; ++x) CHECK(conv_adjoint<Exact>(q, delta(n, x)) == delta(n, g.inverse(x)));
  }
}

TEST_CASE("convolution on ℂ[Γ] is the diagonal product") {
  const auto g = named_group("S3");
  const auto q = group_algebra<Exact>(g);
  gen::Gen rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rng.vector(6), b = rng.vector(6);
    Element<Exact> pointwise(6);
    for (std::size_t x = 0; x < 6; ++x) pointwise[x] = a[x] * b[x];
    CHECK(convolve<Exact>(q, a, b) == pointwise);
  }
}

TEST_CASE("corrupted structure maps are rejected") {
  const auto good = function_algebra<Exact>(named_group("S3"));
  SUBCASE("coproduct") {
    auto bad = good;
    bad.coproduct(0, 1) += Exact(1);
    const auto r = verify_quantum_group(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.passed("coassociativity"));
  }
  SUBCASE("counit") {
    auto bad = good;
    bad.counit(0, 1) = Exact(1);
    CHECK_FALSE(verify_quantum_group(bad).ok());
  }
  SUBCASE("antipode") {
    auto bad = good;
    bad.antipode = LinearMap<Exact>::identity(6);
    CHECK_FALSE(verify_quantum_group(bad).ok());
  }
  SUBCASE("haar state") {
    auto bad = good;
    bad.haar_state(0, 0) += Exact::ratio(1, 6);
    bad.haar_state(0, 1) -= Exact::ratio(1, 6);
    CHECK_FALSE(verify_quantum_group(bad).ok());
  }
}

TEST_CASE("coproducts respect the group law on random elements") {
  gen::Gen rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = named_group(rng.small_group());
    const auto q = group_algebra<Exact>(g);
    const std::size_t n = g.order();
    const auto a = rng.vector(n), b = rng.vector(n);
    const auto lhs = q.coproduct.apply(q.A().multiply(a, b));
    const auto aa = q.coproduct.apply(a), bb = q.coproduct.apply(b);
    CHECK(lhs == tensor_multiply<Exact>(q.A(), q.A(), aa, bb));
    CHECK(is_star_homomorphism(q.A(), tensor_algebra(q.A(), q.A()), q.coproduct));
  }
}

TEST_CASE("Hopf isomorphisms") {
  const auto g = named_group("S3");
  const auto f = function_algebra<Exact>(g);
  CHECK(is_hopf_isomorphism(f, f, LinearMap<Exact>::identity(6)).ok());
  // An inner automorphism of S3 induces a Hopf automorphism; a transposition of
  // two points that is not a group automorphism does not.
  LinearMap<Exact> swap(6, 6);
  for (std::size_t x = 0; x < 6; ++x) swap(x, x) = 1;
  swap(0, 0) = swap(1, 1) = 0;
  swap(0, 1) = swap(1, 0) = 1;
  CHECK(is_star_homomorphism(f.A(), f.A(), swap));
  CHECK_FALSE(intertwines_coproducts(f, f, swap));
  CHECK_FALSE(is_hopf_isomorphism(f, f, swap).ok());
}

TEST_CASE("fundamental examples and the cyclic Pontryagin duality") {
  for (const char* name : {"Z6", "K4", "S3", "Q8"}) {
    CAPTURE(name);
    CHECK(check_fundamental_examples<Exact>(named_group(name)).ok());
  }
  for (std::size_t n : {2u, 5u, 8u}) CHECK(check_pontryagin_cyclic(n).ok());
}
