#include <doctest.h>

#include <numeric>

#include "fqg/error.hpp"
#include "fqg/finite_group.hpp"

using namespace fqg;

TEST_CASE("catalog groups have the expected invariants") {
  struct Expect {
    const char* name;
    std::size_t order, exponent;
    bool abelian, cyclic;
  };
  for (const Expect& e : {Expect{"Z8", 8, 8, true, true}, Expect{"K4", 4, 2, true, false},
                          Expect{"S3", 6, 6, false, false}, Expect{"S4", 24, 12, false, false},
                          Expect{"D4", 8, 4, false, false}, Expect{"Q8", 8, 4, false, false},
                          Expect{"Z2xZ4", 8, 4, true, false}, Expect{"Z2xZ3", 6, 6, true, true}}) {
    CAPTURE(e.name);
    const auto g = named_group(e.name);
    CHECK(g.order() == e.order);
    CHECK(g.exponent() == e.exponent);
    CHECK(g.is_abelian() == e.abelian);
    CHECK(g.is_cyclic() == e.cyclic);
  }
}

TEST_CASE("group tables satisfy the group axioms") {
  for (const auto& name : catalog_group_names()) {
    CAPTURE(name);
    const auto g = named_group(name);
    const std::size_t n = g.order(), e = g.identity();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(g.mul(a, e) == a);
      CHECK(g.mul(a, g.inverse(a)) == e);
      CHECK(g.power(a, static_cast<long>(g.element_order(a))) == e);
      CHECK(g.power(a, -1) == g.inverse(a));
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("invalid tables and names are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidStructure);
  // A Latin square with identity that is not associative.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                  InvalidStructure);
  CHECK_THROWS_AS(named_group("nonsense"), ParseError);
}
