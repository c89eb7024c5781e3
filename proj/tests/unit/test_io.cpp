#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fqg/selftest.hpp"
#include "gen.hpp"

using namespace fqg;

TEST_CASE("scalars round trip") {
  gen::Gen rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Exact s = rng.scalar();
    CHECK(scalar_from_json<Exact>(scalar_to_json(s)) == s);
  }
  CHECK(scalar_from_json<Exact>(Json("3/4")) == Exact::ratio(3, 4));
  CHECK(scalar_from_json<Exact>(Json(2)) == Exact(2));
  CHECK(scalar_from_json<Exact>(Json::array({"0.5", "-1"})) == Exact(mpq_class(1, 2), mpq_class(-1)));
  CHECK_THROWS_AS(scalar_from_json<Exact>(Json::array({"1", "2", "3"})), ParseError);
}

TEST_CASE("quantum groups, dual pairs and tables round trip") {
  for (const char* name : {"Z3", "S3"}) {
    for (auto kind : {GroupKind::function, GroupKind::group}) {
      const auto q = build_quantum_group<Exact>(named_group(name), kind);
      const auto j = quantum_group_to_json(q);
      CHECK(quantum_group_from_json<Exact>(j) == q);
      CHECK(quantum_group_to_json(quantum_group_from_json<Exact>(j)).dump() == j.dump());
      const auto p = build_dual(q);
      CHECK(dual_pair_to_json(p).dump() == dual_pair_to_json(build_dual(q)).dump());
    }
    const auto g = named_group(name);
    CHECK(group_table_from_json(group_table_to_json(g)) == g);
  }
}

TEST_CASE("families round trip") {
  for (const auto& nf : selftest::family_fixtures()) {
    CAPTURE(nf.name);
    const auto j = family_to_json(nf.family);
    const auto back = family_from_json<Exact>(j);
    CHECK(back.alpha == nf.family.alpha);
    CHECK(back.G() == nf.family.G());
    CHECK(back.B() == nf.family.B());
    CHECK(back.hopf_on_B.has_value() == nf.family.hopf_on_B.has_value());
    CHECK(family_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("family references to builtins and files") {
  const auto dir = std::filesystem::temp_directory_path() / "fqg_io_test";
  std::filesystem::create_directories(dir);
  const auto f = function_algebra<Exact>(named_group("Z2"));
  std::ofstream(dir / "fz2.json") << quantum_group_to_json(f).dump();
  Json j;
  j["source"] = "fz2.json";
  j["target"] = Json{{"builtin", "Z2"}, {"kind", "fun"}};
  j["alpha"] = matrix_to_json(LinearMap<Exact>(4, 2));
  j["hopf_on_B"] = Json{{"builtin", "Z2"}, {"kind", "fun"}};
  const auto qf = family_from_json<Exact>(j, dir);
  CHECK(qf.G() == f);
  CHECK(qf.hopf_on_B->coproduct == f.coproduct);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed input raises ParseError") {
  auto j = quantum_group_to_json(function_algebra<Exact>(named_group("Z2")));
  SUBCASE("missing field") {
    j.erase("coproduct");
    CHECK_THROWS_AS(quantum_group_from_json<Exact>(j), ParseError);
  }
  SUBCASE("wrong shape") {
    j["counit"] = Json::array({Json::array({"1"})});
    CHECK_THROWS_AS(quantum_group_from_json<Exact>(j), ParseError);
  }
  SUBCASE("bad number") {
    j["unit"][0] = "one";
    CHECK_THROWS_AS(quantum_group_from_json<Exact>(j), ParseError);
  }
  SUBCASE("table") {
    CHECK_THROWS_AS(group_table_from_json(Json{{"table", Json::array({Json::array({0, 1}), Json::array({1, 1})})}}),
                    ParseError);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/fqg.json"), ParseError);
}

TEST_CASE("reports serialize deterministically") {
  const auto r = is_automorphism_family(selftest::translation_family(named_group("S3"))).report;
  const auto a = report_to_json(r, "exact", 0.0);
  CHECK(a.dump() == report_to_json(r, "exact", 0.0).dump());
  CHECK_FALSE(a.contains("tolerance"));
  CHECK(report_to_json(r, "float", 1e-9).contains("tolerance"));
  CHECK(a["checks"].size() == r.checks().size());
  CHECK(report_to_table(r).find("podles") != std::string::npos);
}
