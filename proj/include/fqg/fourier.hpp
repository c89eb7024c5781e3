#pragma once

#include "fqg/quantum_group.hpp"

namespace fqg {

/// A finite quantum group G together with its dual Ĝ, built on the dual basis
/// {f_i} with f_i(e_j) = δ_ij, and the two Fourier transforms.
template <Scalar S>
struct DualPair {
  GroupPtr<S> primal;
  GroupPtr<S> dual;
  /// 𝓕: A → Â, matrix [h(e_i e_j)].
  LinearMap<S> fourier;
  LinearMap<S> fourier_inverse;
  /// 𝓕̂: Â → A, the Fourier transform of Ĝ with the double dual read as A.
  LinearMap<S> fourier_dual;
};

/// Ĝ with product (ω₁⊗ω₂)∘Δ, unit ε, involution ω* = conj(ω(S(·)*)),
/// coproduct dual to the product of A, counit ω(1), antipode ω∘S, Haar state
/// ĥ(𝓕(a)) = h(η)ε(a) and Haar element 𝓕(1). Throws InvalidStructure when
/// 𝓕 is singular.
template <Scalar S>
DualPair<S> build_dual(GroupPtr<S> g);

template <Scalar S>
DualPair<S> build_dual(const QuantumGroup<S>& g) {
  return build_dual(std::make_shared<const QuantumGroup<S>>(g));
}

/// Convolution and Fourier identities, each checked on all basis pairs:
/// 𝓕(a⋆b) = 𝓕(a)𝓕(b), 𝓕(b)* = 𝓕(b•), Ŝ𝓕 = 𝓕S, h(η)𝓕(ab) = 𝓕(b)⋆𝓕(a),
/// ε(a⋆b) = h(S(b)a), 𝓕(a)• = 𝓕(a*), together with the *-algebra axioms of
/// (A, ⋆, •), 1⋆a = a⋆1 = h(a)1, the quantum group axioms of Ĝ and
/// ĥ(η̂) = h(η).
template <Scalar S>
Report verify_fourier_identities(const DualPair<S>& p);

/// 𝓕̂𝓕 = h(η)S and (𝓕̂𝓕)² = h(η)² id.
template <Scalar S>
Report check_iteration_lemma(const DualPair<S>& p);

/// The dual of Ĝ coincides with G in coordinates.
template <Scalar S>
Report check_double_dual(const DualPair<S>& p);

}  // namespace fqg
