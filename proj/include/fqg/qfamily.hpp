#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqg/fourier.hpp"

namespace fqg {

/// Coproduct (dim² x dim) and counit (1 x dim) on the index algebra B.
template <Scalar S>
struct HopfData {
  LinearMap<S> coproduct;
  LinearMap<S> counit;
};

/// A linear map α: A → A⊗B from the algebra of a finite quantum group into
/// A⊗B, together with B. Whether α is a family of maps, of automorphisms, or
/// an action is decided by the checks below, never assumed.
template <Scalar S>
struct QuantumFamily {
  GroupPtr<S> source;
  AlgebraPtr<S> target;
  LinearMap<S> alpha;
  std::optional<HopfData<S>> hopf_on_B;
  std::string label;

  const QuantumGroup<S>& G() const { return *source; }
  const StarAlgebra<S>& B() const { return *target; }
};

/// Throws DimensionError unless alpha is (dim A · dim B) x dim A and the
/// Hopf data on B, if any, has matching shapes.
template <Scalar S>
void check_family_shape(const QuantumFamily<S>& qf);

/// a ↦ a⊗1 with B = ℂ.
template <Scalar S>
QuantumFamily<S> identity_family(GroupPtr<S> g);

/// a ↦ ε(a)1⊗1 with B = ℂ.
template <Scalar S>
QuantumFamily<S> counit_family(GroupPtr<S> g);

/// Checks "unital", "multiplicative" and "star" of a linear map phi: A → A⊗B
/// with respect to the given algebra structure on A.
template <Scalar S>
Report hom_checks(const StarAlgebra<S>& a, const StarAlgebra<S>& b, const LinearMap<S>& phi);

/// α(1) = 1⊗1, α multiplicative and *-preserving.
template <Scalar S>
Check unital_star_hom(const QuantumFamily<S>& qf);

/// The vectors α(e_a)(1⊗f_b) span A⊗B. The detail also records the rank of
/// the slices {(id⊗ω_b)α(e_a)}.
template <Scalar S>
Check podles(const QuantumFamily<S>& qf);

/// {unital_star_hom, podles}.
template <Scalar S>
Report check_family(const QuantumFamily<S>& qf);

/// α(a⋆b) = α(a) ⋆·m α(b), the product of (A, ⋆) ⊗ B.
template <Scalar S>
Check conv_product(const QuantumFamily<S>& qf);

/// α(a•) = (•⊗*)α(a).
template <Scalar S>
Check conv_adjoint_preserved(const QuantumFamily<S>& qf);

/// α(η) = η⊗1.
template <Scalar S>
Check haar_element_preserved(const QuantumFamily<S>& qf);

/// (ε⊗id)α = ε(·)1.
template <Scalar S>
Check counit_preserved(const QuantumFamily<S>& qf);

/// (h⊗id)α = h(·)1.
template <Scalar S>
Check haar_state_preserved(const QuantumFamily<S>& qf);

/// {conv_product, conv_adjoint, haar_element, counit, haar_state}.
template <Scalar S>
Report check_convolution_preservation(const QuantumFamily<S>& qf);

/// (𝓕⊗id)∘α∘𝓕⁻¹.
template <Scalar S>
LinearMap<S> hat_by_fourier_inverse(const DualPair<S>& p, const LinearMap<S>& alpha);

/// (1/h(η))(𝓕⊗id)∘α∘𝓕̂∘Ŝ.
template <Scalar S>
LinearMap<S> hat_by_definition(const DualPair<S>& p, const LinearMap<S>& alpha);

/// The family α̂ on Ĝ with the same B. Both formulas are evaluated and must
/// agree; InvalidStructure is thrown otherwise. p.primal must be qf.source.
template <Scalar S>
QuantumFamily<S> hat(const DualPair<S>& p, const QuantumFamily<S>& qf);

template <Scalar S>
QuantumFamily<S> hat(const QuantumFamily<S>& qf) {
  return hat(build_dual(qf.source), qf);
}

/// Both sides of one item of the dual correspondence.
struct Equivalence {
  std::string name;
  bool dual_side = false;
  bool primal_side = false;
  bool agrees() const { return dual_side == primal_side; }
};

/// Items, each as (property of α̂, property of α):
///   multiplicative: α̂ multiplicative / α preserves ⋆
///   star: α̂ *-preserving / α preserves •
///   unital: α̂(1̂) = 1̂⊗1 / α(η) = η⊗1
///   haar_state: α̂ preserves ĥ / α preserves ε
template <Scalar S>
std::vector<Equivalence> dual_equivalences(const DualPair<S>& p, const QuantumFamily<S>& qf);

/// One check per item that passes when both sides agree.
template <Scalar S>
Report verify_dual_equivalences(const DualPair<S>& p, const QuantumFamily<S>& qf);

template <Scalar S>
Report verify_dual_equivalences(const QuantumFamily<S>& qf) {
  return verify_dual_equivalences(build_dual(qf.source), qf);
}

/// The five defining conditions of a family of automorphisms: unital *-hom,
/// Podleś, ⋆ and • preserved, Haar element preserved.
template <Scalar S>
Report automorphism_conditions(const QuantumFamily<S>& qf);

struct AutomorphismVerdict {
  bool is_automorphism = false;
  Report report;
};

/// Verdict from automorphism_conditions. When it is true the report also
/// checks hat(hat(α)) = α ("double_hat"), that α̂ satisfies the conditions on
/// Ĝ ("dual_family"), and that counit and Haar state are preserved.
template <Scalar S>
AutomorphismVerdict is_automorphism_family(const QuantumFamily<S>& qf);

/// (S⊗id)∘α∘S, which hat(hat(α)) must equal for any linear α.
template <Scalar S>
LinearMap<S> double_hat_expected(const QuantumFamily<S>& qf);

/// hat(hat(α)) as a map A → A⊗B, reading the double dual as A.
template <Scalar S>
LinearMap<S> double_hat(const QuantumFamily<S>& qf);

/// β△γ = (β⊗id)∘γ, a family indexed by B⊗C. Throws InvalidStructure when the
/// sources differ.
template <Scalar S>
QuantumFamily<S> compose(const QuantumFamily<S>& beta, const QuantumFamily<S>& gamma);

/// (id⊗Δ_B)∘α = (α⊗id)∘α and (id⊗ε_B)∘α = id, after checking that the Hopf
/// data on B is coassociative with counit. Throws InvalidStructure when
/// there is none.
template <Scalar S>
Report check_action(const QuantumFamily<S>& qf);

/// ψ_x = (id⊗ξ_x)∘α for each point x of B, where ξ_x reads the coefficient of
/// the x-th basis vector.
template <Scalar S>
struct Slices {
  std::vector<LinearMap<S>> maps;
  Report report;
};

/// Requires B commutative in its point basis (InvalidStructure otherwise).
/// Each slice is checked to be a Hopf *-automorphism of G.
template <Scalar S>
Slices<S> slice_commutative(const QuantumFamily<S>& qf);

}  // namespace fqg
