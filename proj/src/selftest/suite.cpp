#include <map>
#include <set>
#include <sstream>

#include "fqg/selftest.hpp"

namespace fqg::selftest {

namespace {

class Tally {
 public:
  Tally(int id, std::string name) { result_.id = id, result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      result_.pass = false;
      result_.failures.push_back(what);
    }
  }

  void report(const Report& r, const std::string& context) {
    for (const auto& c : r.checks()) {
      ++result_.checks;
      if (c.pass) continue;
      result_.pass = false;
      std::string line = context + ": " + c.name;
      if (!c.witness.empty()) {
        line += " at (";
        for (std::size_t i = 0; i < c.witness.size(); ++i) line += (i ? ", " : "") + std::to_string(c.witness[i]);
        line += ")";
      }
      if (!c.detail.empty()) line += " " + c.detail;
      result_.failures.push_back(line);
    }
  }

  // Runs body, turning an exception into a failure of this criterion.
  template <class F>
  void guard(const std::string& context, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, context + ": " + e.what());
    }
  }

  CriterionResult done() { return std::move(result_); }

 private:
  CriterionResult result_;
};

const std::vector<GroupKind> kinds = {GroupKind::function, GroupKind::group};

std::string kind_label(const std::string& name, GroupKind kind) {
  return (kind == GroupKind::function ? "F(" : "ℂ[") + name + (kind == GroupKind::function ? ")" : "]");
}

CriterionResult hopf_axioms() {
  Tally t(1, "hopf_axioms");
  for (const auto& name : catalog_group_names())
    for (auto kind : kinds) {
      const auto label = kind_label(name, kind);
      t.guard(label, [&] {
        const auto g = shared_group(name, kind);
        t.report(verify_quantum_group(*g), label);
        t.expect(evaluate<Exact>(g->haar_state, g->haar_element) == Exact::ratio(1, static_cast<long>(g->dim())),
                 label + ": h(η) = 1/dim");
      });
    }
  return t.done();
}

CriterionResult fourier_identities() {
  Tally t(2, "fourier_identities");
  for (const auto& name : catalog_group_names())
    for (auto kind : kinds) {
      const auto label = kind_label(name, kind);
      t.guard(label, [&] {
        const auto g = shared_group(name, kind);
        const auto p = build_dual(g);
        t.report(verify_fourier_identities(p), label);
        t.report(check_hw_identity(*g), label);
        t.report(check_iteration_lemma(p), label);
        t.report(check_double_dual(p), label);
        t.expect(p.fourier_dual * p.fourier == Exact::ratio(1, static_cast<long>(g->dim())) * g->antipode,
                 label + ": 𝓕̂𝓕 = (1/dim)S");
      });
    }
  return t.done();
}

CriterionResult fundamental_examples() {
  Tally t(3, "fundamental_examples");
  for (const auto& name : catalog_group_names()) {
    t.guard(name, [&] {
      const auto g = named_group(name);
      t.report(check_fundamental_examples<Exact>(g), name);
      if (g.is_cyclic()) t.report(check_pontryagin_cyclic(g.order()), name + " (float)");
    });
  }
  return t.done();
}

bool is_automorphism(const FiniteGroup& g, const Permutation& psi) {
  std::set<std::size_t> image(psi.begin(), psi.end());
  if (image.size() != g.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (psi[g.mul(a, b)] != g.mul(psi[a], psi[b])) return false;
  return true;
}

CriterionResult automorphism_oracle() {
  Tally t(4, "automorphism_oracle");
  const std::map<std::string, std::size_t> known = {{"Z8", 4}, {"K4", 6}, {"S3", 6},
                                                    {"D4", 8}, {"Q8", 24}, {"S4", 24}};
  for (const auto& name : catalog_group_names()) {
    t.guard(name, [&] {
      const auto g = named_group(name);
      const auto auts = enumerate_automorphisms(g);
      if (g.order() <= 8) t.expect(auts == brute_force_automorphisms(g), name + ": pruned search matches brute force");
      bool all = true;
      for (const auto& psi : auts) all = all && is_automorphism(g, psi);
      t.expect(all, name + ": every enumerated map is an automorphism");
      if (auto it = known.find(name); it != known.end())
        t.expect(auts.size() == it->second, name + ": |Aut| = " + std::to_string(it->second) + ", found " +
                                                std::to_string(auts.size()));
    });
  }
  return t.done();
}

CriterionResult universal_families() {
  Tally t(5, "universal_family");
  for (const auto& name : catalog_group_names()) {
    t.guard(name, [&] {
      const auto g = named_group(name);
      const auto qf = universal_classical_family<Exact>(g);
      const auto verdict = is_automorphism_family(qf);
      t.expect(verdict.is_automorphism, name + ": is_automorphism_family");
      t.report(verdict.report, name);
      t.report(check_action(qf), name);
      const auto m = extract_matrix(qf);
      t.report(check_magic_unitary(m), name);
      t.report(check_dualact_consequences(m), name);
      t.report(check_order_properties(m), name);
      const auto slices = slice_commutative(qf);
      t.report(slices.report, name);
      const auto auts = enumerate_automorphisms(g);
      bool same = slices.maps.size() == auts.size();
      for (std::size_t k = 0; same && k < auts.size(); ++k) same = slices.maps[k] == permutation_map<Exact>(auts[k]);
      t.expect(same, name + ": slices are exactly the enumerated automorphisms");
    });
  }
  return t.done();
}

CriterionResult family_duality(const std::vector<NamedFamily>& fixtures) {
  Tally t(6, "family_duality");
  bool seen_true = false, seen_false = false;
  for (const auto& [name, qf] : fixtures) {
    t.guard(name, [&] {
      const auto p = build_dual(qf.source);
      t.expect(hat_by_definition(p, qf.alpha) == hat_by_fourier_inverse(p, qf.alpha), name + ": hat formulas agree");
      t.expect(double_hat(qf) == double_hat_expected(qf), name + ": hat∘hat = (S⊗id)αS");
      const bool primal = is_automorphism_family(qf).is_automorphism;
      const bool dual = is_automorphism_family(hat(p, qf)).is_automorphism;
      t.expect(primal == dual, name + ": automorphism verdict survives hat");
      (primal ? seen_true : seen_false) = true;
    });
  }
  t.expect(seen_true && seen_false, "fixtures contain both automorphism and non-automorphism families");
  return t.done();
}

CriterionResult dual_equivalence_items(const std::vector<NamedFamily>& fixtures) {
  Tally t(7, "dual_equivalences");
  std::map<std::string, std::set<std::pair<bool, bool>>> seen;
  for (const auto& [name, qf] : fixtures) {
    t.guard(name, [&] {
      for (const auto& e : dual_equivalences(build_dual(qf.source), qf)) {
        t.expect(e.agrees(), name + ": " + e.name + " sides disagree");
        seen[e.name].insert({e.dual_side, e.primal_side});
      }
    });
  }
  for (const char* item : {"multiplicative", "star", "unital"}) {
    t.expect(seen[item].count({true, true}) == 1, std::string(item) + ": no fixture with both sides true");
    t.expect(seen[item].count({false, false}) == 1, std::string(item) + ": no fixture with both sides false");
  }
  return t.done();
}

CriterionResult composition() {
  Tally t(8, "composition");
  for (const char* name : {"Z5", "S3"}) {
    t.guard(name, [&] {
      const auto g = named_group(name);
      const auto uni = universal_classical_family<Exact>(g);
      const auto both = compose(uni, uni);
      const std::size_t m = uni.B().dim();
      t.expect(both.B().dim() == m * m, std::string(name) + ": target dimension |Aut|²");
      const auto verdict = is_automorphism_family(both);
      t.expect(verdict.is_automorphism, std::string(name) + ": composition is an automorphism family");
      t.report(verdict.report, std::string(name) + " composed");
      const auto auts = enumerate_automorphisms(g);
      const auto table = automorphism_group(g, auts);
      const auto slices = slice_commutative(both);
      bool law = slices.maps.size() == m * m;
      for (std::size_t a = 0; law && a < m; ++a)
        for (std::size_t b = 0; law && b < m; ++b)
          law = slices.maps[a * m + b] == permutation_map<Exact>(auts[table.mul(a, b)]);
      t.expect(law, std::string(name) + ": sliced composition reproduces the Aut multiplication table");
      const auto with_id = compose(identity_family(uni.source), uni);
      t.expect(with_id.alpha == uni.alpha, std::string(name) + ": compose(identity, α) = α");
    });
  }
  t.guard("associativity", [&] {
    const auto a = universal_classical_family<Exact>(named_group("Z3"));
    const auto b = broken_action_family(named_group("Z3"));
    const auto c = universal_classical_family<Exact>(named_group("Z3"));
    t.expect(compose(compose(a, b), c).alpha == compose(a, compose(b, c)).alpha, "Z3: (β△γ)△δ = β△(γ△δ)");
  });
  return t.done();
}

CriterionResult section_three_relations() {
  Tally t(9, "classical_relations");
  t.guard("translation(S3)", [&] {
    const auto r = check_pointwise_relations(extract_matrix(translation_family(named_group("S3"))));
    const auto* a = r.find("auto");
    t.expect(a != nullptr && !a->pass && !a->witness.empty(), "translation(S3): auto fails with a witness");
  });
  for (const auto& name : catalog_group_names()) {
    t.guard(name, [&] {
      const auto g = named_group(name);
      const auto uni = universal_classical_family<Exact>(g);
      const auto id = identity_family(std::make_shared<const QuantumGroup<Exact>>(function_algebra<Exact>(g)));
      for (const auto* qf : {&uni, &id}) {
        const auto m = extract_matrix(*qf);
        t.report(check_pointwise_relations(m), qf->label);
        t.report(check_order_properties(m), qf->label);
      }
    });
  }
  t.guard("Z6", [&] {
    const auto g = named_group("Z6");
    const auto m = extract_matrix(universal_classical_family<Exact>(g));
    bool zero = true;
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y)
        if (g.element_order(x) != g.element_order(y)) zero = zero && is_zero_vector<Exact>(m(x, y));
    t.expect(zero, "Z6: p_{x,y} = 0 for ord(x) ≠ ord(y)");
  });
  t.guard("magic fixtures", [&] {
    t.report(check_magic_unitary(m2_magic_fixture()), "M2 magic unitary");
    const auto r = check_magic_unitary(rows_only_stochastic_fixture());
    t.expect(r.passed("row_sums") && !r.passed("column_sums"), "rows-only stochastic: rows pass, columns fail");
  });
  return t.done();
}

CriterionResult cyclic_theorem() {
  Tally t(10, "cyclic_identity");
  for (const char* name : {"Z4", "Z6", "Z8", "Z9"}) {
    t.guard(name, [&] {
      t.report(check_cyclic_identity(extract_matrix(universal_classical_family<Exact>(named_group(name)))), name);
    });
  }
  return t.done();
}

CriterionResult dual_group_theorem() {
  Tally t(11, "dual_group_theorem");
  for (const char* name : {"S3", "Z4"}) {
    t.guard(name, [&] {
      const auto r = check_dual_group_theorem(hat(universal_classical_family<Exact>(named_group(name))));
      t.report(r, std::string("hat(universal(") + name + "))");
      t.expect(r.checks().size() == 9, std::string(name) + ": all nine stages evaluated");
    });
  }
  t.guard("grading(ℂ[Z4])", [&] {
    const auto r = check_dual_group_theorem(grading_family());
    const auto failed = r.violations();
    t.expect(failed.size() == 1 && failed.front().name == "idempotency" && r.passed("counit") && r.passed("coprod"),
             "grading(ℂ[Z4]): fails first at idempotency");
  });
  return t.done();
}

}  // namespace

std::vector<CriterionResult> run_criteria() {
  const auto fixtures = family_fixtures();
  return {hopf_axioms(),          fourier_identities(),    fundamental_examples(),
          automorphism_oracle(),  universal_families(),    family_duality(fixtures),
          dual_equivalence_items(fixtures), composition(), section_three_relations(),
          cyclic_theorem(),       dual_group_theorem()};
}

Json criteria_to_json(const std::vector<CriterionResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json e;
    e["id"] = r.id;
    e["name"] = r.name;
    e["pass"] = r.pass;
    e["checks"] = r.checks;
    e["failures"] = r.failures;
    list.push_back(std::move(e));
    all = all && r.pass;
  }
  Json out;
  out["pass"] = all;
  out["criteria"] = std::move(list);
  return out;
}

std::string criterion_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.checks << " checks)\n";
  for (const auto& f : r.failures) out << "    " << f << "\n";
  return out.str();
}

}  // namespace fqg::selftest
