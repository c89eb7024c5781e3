#pragma once

#include <vector>

#include "fqg/constructors.hpp"
#include "fqg/qfamily.hpp"

namespace fqg {

/// The |Γ| x |Γ| matrix of B-valued entries read off a family on F(Γ) or
/// ℂ[Γ]: entry(r, c) is the B-component of α(e_c) along e_r. On F(Γ) this is
/// p_{x,y} with α(δ_y) = Σ_x δ_x⊗p_{x,y}; on ℂ[Γ] it is u_{y,x} with
/// α(λ_x) = Σ_y λ_y⊗u_{y,x}.
template <Scalar S>
struct MagicMatrix {
  FiniteGroup group;
  GroupKind kind;
  AlgebraPtr<S> target;
  std::vector<Element<S>> entries;

  std::size_t size() const { return group.order(); }
  const Element<S>& operator()(std::size_t r, std::size_t c) const { return entries[r * size() + c]; }
  const StarAlgebra<S>& B() const { return *target; }
};

/// Throws InvalidStructure unless the source of qf is F(Γ) or ℂ[Γ] in its
/// standard basis.
template <Scalar S>
MagicMatrix<S> extract_matrix(const QuantumFamily<S>& qf);

/// On F(Γ): "self_adjoint", "idempotent", "row_sums" (Σ_y p_{x,y} = 1),
/// "star_map" (p_{x,y}* = p_{x⁻¹,y⁻¹}), "auto" (p_{x,yz} = Σ_u p_{u,y}p_{u⁻¹x,z})
/// and "auto_rewrite_agrees": when the matrix is a magic unitary, "auto"
/// holds exactly when p_{x,y}p_{z,u} = p_{x,y}p_{xz,yu} does.
template <Scalar S>
Report check_pointwise_relations(const MagicMatrix<S>& m);

/// Entries are projections, rows and columns sum to 1, entries in a row and
/// in a column are mutually orthogonal.
template <Scalar S>
Report check_magic_unitary(const MagicMatrix<S>& m);

/// Ordered chain, stopping at the first failure:
///   auto2: p_{u,y}p_{x,yz} = p_{u,y}p_{u⁻¹x,z}
///   absorbs_pee: p_{u,y} = p_{u,y}p_{e,e}
///   pee_is_one: p_{e,e} = 1
///   border_row: p_{e,y} = δ_{y,e}1, border_column: p_{x,e} = δ_{x,e}1
///   haar_element: α(δ_e) = δ_e⊗1
///   absorbs_inverse: p_{u,y} = p_{u,y}p_{u⁻¹,y⁻¹}
///   inverse_symmetric: p_{u⁻¹,y⁻¹} = p_{u,y}
template <Scalar S>
Report check_dualact_consequences(const MagicMatrix<S>& m);

/// Over all index tuples, with powers k from 0 to exponent(Γ) - 1:
///   order_zero: p_{x,y} = 0 when ord(x) ≠ ord(y)
///   commute_row: p_{x,y}p_{x^k,z} = p_{x^k,z}p_{x,y}
///   commute_column: p_{x,y}p_{z,y^k} = p_{z,y^k}p_{x,y}
///   dominance: p_{x,y}p_{x^k,y^k} = p_{x,y}
///   inductively: p_{x,y}p_{x^{k+1},y^k u} = δ_{y,u}p_{x,y}
///   auto3: p_{x,y}p_{z,u} = p_{x,y}p_{xz,yu}
template <Scalar S>
Report check_order_properties(const MagicMatrix<S>& m);

/// For Γ cyclic: p_{x^d,s^d} = Σ_{v^d = s^d} p_{x,v} for every generator x,
/// divisor d of |Γ| and s, and all entries commute. Throws InvalidStructure
/// when Γ is not cyclic.
template <Scalar S>
Report check_cyclic_identity(const MagicMatrix<S>& m);

/// Automorphisms of Γ as permutations of element indices, found by
/// backtracking over generator images of matching order. Sorted, so the
/// identity comes first.
std::vector<Permutation> enumerate_automorphisms(const FiniteGroup& g);

/// The group of the given automorphisms under composition, (ab)(y) = a(b(y)),
/// with element i standing for auts[i].
FiniteGroup automorphism_group(const FiniteGroup& g, const std::vector<Permutation>& auts);

/// δ_y ↦ δ_{ψ(y)} on F(Γ).
template <Scalar S>
LinearMap<S> permutation_map(const Permutation& psi);

/// α(δ_y) = Σ_ψ δ_{ψ(y)}⊗δ_ψ on F(Γ) with B = F(Aut(Γ)) and the Hopf
/// structure of F(Aut(Γ)) on B.
template <Scalar S>
QuantumFamily<S> universal_classical_family(const FiniteGroup& g);

/// For a family on ℂ[Γ] with Hopf data on B, the stages:
///   counit, coprod, idempotency, self_adjoint, column_sums,
///   row_orthogonality, beta_action, row_sums, automorphism_family
/// where beta_action checks that β(δ_x) = Σ_y δ_y⊗u_{x,y} is a unital
/// *-homomorphism on F(Γ) satisfying the action equation for the opposite
/// coproduct of B together with (id⊗ε)β = id. Evaluation stops at the first
/// failing stage.
template <Scalar S>
Report check_dual_group_theorem(const QuantumFamily<S>& qf);

}  // namespace fqg
