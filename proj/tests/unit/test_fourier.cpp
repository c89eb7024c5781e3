#include <doctest.h>

#include "fqg/constructors.hpp"
#include "fqg/fourier.hpp"
#include "gen.hpp"

using namespace fqg;

TEST_CASE("Fourier matrices of F(Γ) and ℂ[Γ]") {
  for (const char* name : {"Z4", "S3", "Q8"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const std::size_t n = g.order();
    const auto fun = build_dual(function_algebra<Exact>(g));
    CHECK(fun.fourier == Exact::ratio(1, static_cast<long>(n)) * LinearMap<Exact>::identity(n));
    const auto grp = build_dual(group_algebra<Exact>(g));
    LinearMap<Exact> expected(n, n);
    for (std::size_t x = 0; x < n; ++x) expected(x, g.inverse(x)) = 1;
    CHECK(grp.fourier == expected);
    CHECK(grp.fourier * grp.fourier_inverse == LinearMap<Exact>::identity(n));
  }
}

TEST_CASE("the dual of F(Γ) in the dual basis is ℂ[Γ]") {
  for (const char* name : {"Z5", "K4", "S3", "D4"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto p = build_dual(function_algebra<Exact>(g));
    CHECK(*p.dual == group_algebra<Exact>(g));
    const auto q = build_dual(group_algebra<Exact>(g));
    CHECK(*q.dual == function_algebra<Exact>(g));
  }
}

TEST_CASE("the Fourier transform has order four up to scale") {
  for (const auto& name : catalog_group_names()) {
    CAPTURE(name);
    for (auto kind : {GroupKind::function, GroupKind::group}) {
      const auto p = build_dual(build_quantum_group<Exact>(named_group(name), kind));
      const Exact inv_dim = Exact::ratio(1, static_cast<long>(p.primal->dim()));
      const auto twice = p.fourier_dual * p.fourier;
      CHECK(twice == inv_dim * p.primal->antipode);
      CHECK(twice * twice == (inv_dim * inv_dim) * LinearMap<Exact>::identity(p.primal->dim()));
    }
  }
}

TEST_CASE("Fourier identities on random elements") {
  gen::Gen rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const auto kind = rng.coin() ? GroupKind::function : GroupKind::group;
    const auto p = build_dual(build_quantum_group<Exact>(named_group(rng.small_group()), kind));
    const auto& q = *p.primal;
    const std::size_t n = q.dim();
    const auto a = rng.vector(n), b = rng.vector(n);
    CHECK(p.fourier.apply(convolve<Exact>(q, a, b)) == p.dual->A().multiply(p.fourier.apply(a), p.fourier.apply(b)));
    CHECK(p.dual->A().star(p.fourier.apply(b)) == p.fourier.apply(conv_adjoint<Exact>(q, b)));
    const Exact h_eta = evaluate<Exact>(q.haar_state, q.haar_element);
    CHECK(scaled<Exact>(h_eta, p.fourier.apply(q.A().multiply(a, b))) ==
          convolve<Exact>(*p.dual, p.fourier.apply(b), p.fourier.apply(a)));
  }
}

TEST_CASE("identity checks pass on the whole catalog") {
  for (const char* name : {"Z2", "Z7", "K4", "S3", "Q8"}) {
    CAPTURE(name);
    for (auto kind : {GroupKind::function, GroupKind::group}) {
      const auto q = build_quantum_group<Exact>(named_group(name), kind);
      const auto p = build_dual(q);
      CHECK(verify_fourier_identities(p).ok());
      CHECK(check_iteration_lemma(p).ok());
      CHECK(check_double_dual(p).ok());
      CHECK(check_hw_identity(q).ok());
    }
  }
}

TEST_CASE("the float backend agrees with the exact backend") {
  const auto g = named_group("S3");
  const auto exact = build_dual(group_algebra<Exact>(g));
  const auto approx = build_dual(group_algebra<Approx>(g));
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      CHECK(approx.fourier(r, c) == Approx(exact.fourier(r, c).to_complex()));
      CHECK(approx.fourier_dual(r, c) == Approx(exact.fourier_dual(r, c).to_complex()));
    }
  CHECK(verify_fourier_identities(approx).ok());
}
