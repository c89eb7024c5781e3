#pragma once

#include <optional>
#include <string>

#include "fqg/finite_group.hpp"
#include "fqg/quantum_group.hpp"

namespace fqg {

enum class GroupKind { function, group };

/// "fun" or "grp". Throws ParseError otherwise.
GroupKind parse_group_kind(const std::string& text);
const char* group_kind_name(GroupKind kind);

/// F(Γ) on the point basis δ_g: pointwise product, Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b,
/// ε(δ_g) = δ_{g,e}, S(δ_g) = δ_{g⁻¹}, h(δ_g) = 1/|Γ|, η = δ_e.
template <Scalar S>
QuantumGroup<S> function_algebra(const FiniteGroup& g);

/// ℂ[Γ] on the basis λ_g: λ_gλ_h = λ_{gh}, λ_g* = λ_{g⁻¹}, Δ(λ_g) = λ_g⊗λ_g,
/// ε(λ_g) = 1, S(λ_g) = λ_{g⁻¹}, h(λ_g) = δ_{g,e}, η = (1/|Γ|)Σ λ_g.
template <Scalar S>
QuantumGroup<S> group_algebra(const FiniteGroup& g);

template <Scalar S>
QuantumGroup<S> build_quantum_group(const FiniteGroup& g, GroupKind kind) {
  return kind == GroupKind::function ? function_algebra<S>(g) : group_algebra<S>(g);
}

/// The finite group behind a quantum group that is exactly F(Γ) or ℂ[Γ] in
/// its basis, with the identity at whatever index it occupies.
struct RecoveredGroup {
  FiniteGroup group;
  GroupKind kind;
};

template <Scalar S>
std::optional<RecoveredGroup> recover_group(const QuantumGroup<S>& g);

/// The convolution and Fourier formulas for F(Γ) and ℂ[Γ], and the Hopf
/// isomorphism between the dual of F(Γ) and ℂ[Γ].
template <Scalar S>
Report check_fundamental_examples(const FiniteGroup& g);

/// Float-only cross-check: λ_k ↦ Σ_j ω^{jk} δ_j is a Hopf *-isomorphism
/// ℂ[Z_n] → F(Z_n).
Report check_pontryagin_cyclic(std::size_t n);

}  // namespace fqg
