#include <doctest.h>

#include <numeric>

#include "fqg/classical_aut.hpp"
#include "fqg/selftest.hpp"

using namespace fqg;

namespace {

std::size_t euler_phi(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

}  // namespace

TEST_CASE("automorphism counts") {
  for (std::size_t n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(enumerate_automorphisms(named_group("Z" + std::to_string(n))).size() == euler_phi(n));
  }
  CHECK(enumerate_automorphisms(named_group("K4")).size() == 6);
  CHECK(enumerate_automorphisms(named_group("S3")).size() == 6);
  CHECK(enumerate_automorphisms(named_group("D4")).size() == 8);
  CHECK(enumerate_automorphisms(named_group("Q8")).size() == 24);
  CHECK(enumerate_automorphisms(named_group("S4")).size() == 24);
  CHECK(enumerate_automorphisms(named_group("Z2xZ4")).size() == 8);
}

TEST_CASE("the pruned search matches brute force on small groups") {
  for (const auto& name : catalog_group_names()) {
    const auto g = named_group(name);
    if (g.order() > 8) continue;
    CAPTURE(name);
    CHECK(enumerate_automorphisms(g) == selftest::brute_force_automorphisms(g));
  }
}

TEST_CASE("the automorphism group is closed under composition") {
  const auto g = named_group("D4");
  const auto auts = enumerate_automorphisms(g);
  CHECK(auts.front() == [&] {
    Permutation id(g.order());
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  const auto aut = automorphism_group(g, auts);
  for (std::size_t a = 0; a < auts.size(); ++a)
    for (std::size_t b = 0; b < auts.size(); ++b) {
      const auto& ab = auts[aut.mul(a, b)];
      for (std::size_t y = 0; y < g.order(); ++y) CHECK(ab[y] == auts[a][auts[b][y]]);
    }
}

TEST_CASE("universal families satisfy every relation scheme") {
  for (const char* name : {"Z6", "K4", "S3", "Q8"}) {
    CAPTURE(name);
    const auto qf = universal_classical_family<Exact>(named_group(name));
    const auto m = extract_matrix(qf);
    CHECK(check_pointwise_relations(m).ok());
    CHECK(check_magic_unitary(m).ok());
    CHECK(check_dualact_consequences(m).ok());
    CHECK(check_order_properties(m).ok());
  }
}

TEST_CASE("entries between elements of different orders vanish") {
  const auto g = named_group("Z6");
  const auto m = extract_matrix(universal_classical_family<Exact>(g));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      if (g.element_order(x) != g.element_order(y)) CHECK(is_zero_vector<Exact>(m(x, y)));
}

TEST_CASE("the translation action violates the automorphism relation") {
  const auto m = extract_matrix(selftest::translation_family(named_group("S3")));
  const auto r = check_pointwise_relations(m);
  const Check* c = r.find("auto");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->witness.size() == 3);
  CHECK(check_magic_unitary(m).ok());
}

TEST_CASE("magic unitary fixtures") {
  CHECK(check_magic_unitary(selftest::m2_magic_fixture()).ok());
  const auto rows_only = check_magic_unitary(selftest::rows_only_stochastic_fixture());
  CHECK(rows_only.passed("row_sums"));
  CHECK_FALSE(rows_only.passed("column_sums"));
}

TEST_CASE("cyclic identity") {
  for (const char* name : {"Z5", "Z8", "Z9"}) {
    CAPTURE(name);
    CHECK(check_cyclic_identity(extract_matrix(universal_classical_family<Exact>(named_group(name)))).ok());
  }
  CHECK_THROWS_AS(check_cyclic_identity(extract_matrix(universal_classical_family<Exact>(named_group("K4")))),
                  InvalidStructure);
}

TEST_CASE("dual group theorem stages") {
  const auto h = hat(universal_classical_family<Exact>(named_group("S3")));
  const auto r = check_dual_group_theorem(h);
  CHECK(r.ok());
  CHECK(r.checks().size() == 9);
  const auto bad = check_dual_group_theorem(selftest::grading_family());
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations().front().name == "idempotency");
  CHECK(bad.checks().back().name == "idempotency");
}
