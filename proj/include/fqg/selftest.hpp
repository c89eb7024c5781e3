#pragma once

#include <string>
#include <vector>

#include "fqg/io.hpp"

namespace fqg::selftest {

using Family = QuantumFamily<Exact>;

struct NamedFamily {
  std::string name;
  Family family;
};

GroupPtr<Exact> shared_group(const std::string& name, GroupKind kind);

/// α(δ_y) = Σ_g δ_{gy}⊗δ_g on F(Γ), indexed by F(Γ) with its own Hopf
/// structure: an action of Γ by translations.
Family translation_family(const FiniteGroup& g);

/// a ↦ c·a⊗1 with B = ℂ.
Family scaled_identity_family(GroupPtr<Exact> g, const Exact& c);

/// λ_x ↦ λ_x⊗λ_{x mod 2} from ℂ[Z4] into ℂ[Z4]⊗ℂ[Z2], with the Hopf
/// structure of ℂ[Z2] on B.
Family grading_family();

/// The universal family of Γ with the first two basis vectors of B swapped,
/// keeping the original Hopf structure on B.
Family broken_action_family(const FiniteGroup& g);

/// The universal family of Z3 pushed into M_2 along F(Z2) → diagonal of M_2.
Family matrix_embedded_family();

/// a ↦ (random rational matrix) with B = F(Z2), deterministic in the seed.
Family random_linear_family(GroupPtr<Exact> g, unsigned seed);

/// Positive and negative fixtures used by the duality criteria.
std::vector<NamedFamily> family_fixtures();

/// p = [[q, 1−q], [1−q, q]] over M_2 with q = ½[[1, 1], [1, 1]], on Z2.
MagicMatrix<Exact> m2_magic_fixture();

/// p00 = p10 = δ_1, p01 = p11 = δ_2 over ℂ², on Z2: rows sum to 1, columns do not.
MagicMatrix<Exact> rows_only_stochastic_fixture();

/// All automorphisms by scanning every bijection fixing the identity.
std::vector<Permutation> brute_force_automorphisms(const FiniteGroup& g);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Criteria 1 to 11 over the built-in catalog.
std::vector<CriterionResult> run_criteria();

Json criteria_to_json(const std::vector<CriterionResult>& results);

/// "[PASS] 3 fundamental_examples (48 checks)" and failure lines beneath.
std::string criterion_line(const CriterionResult& r);

}  // namespace fqg::selftest
