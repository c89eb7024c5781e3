#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fqg/star_algebra.hpp"

namespace fqg {

/// Algebra of functions on a finite quantum group: a *-algebra A with
/// coproduct Δ (dim² x dim), counit ε and Haar state h (1 x dim), antipode S
/// and Haar element η.
template <Scalar S>
struct QuantumGroup {
  AlgebraPtr<S> algebra;
  LinearMap<S> coproduct;
  LinearMap<S> counit;
  LinearMap<S> antipode;
  LinearMap<S> haar_state;
  Element<S> haar_element;

  const StarAlgebra<S>& A() const { return *algebra; }
  std::size_t dim() const { return algebra->dim(); }
  const std::string& label() const { return algebra->label(); }

  friend bool operator==(const QuantumGroup& a, const QuantumGroup& b) {
    return *a.algebra == *b.algebra && a.coproduct == b.coproduct && a.counit == b.counit &&
           a.antipode == b.antipode && a.haar_state == b.haar_state && a.haar_element == b.haar_element;
  }
};

template <Scalar S>
using GroupPtr = std::shared_ptr<const QuantumGroup<S>>;

/// Checks shapes and fills in a missing Haar state or Haar element with the
/// solvers below. Throws DimensionError or InvalidStructure.
template <Scalar S>
QuantumGroup<S> make_quantum_group(AlgebraPtr<S> algebra, LinearMap<S> coproduct, LinearMap<S> counit,
                                   LinearMap<S> antipode, std::optional<LinearMap<S>> haar_state = std::nullopt,
                                   std::optional<Element<S>> haar_element = std::nullopt);

/// Value of a 1 x n functional on x.
template <Scalar S>
S evaluate(const LinearMap<S>& functional, std::span<const S> x) {
  return dot<S>(functional.row(0), x);
}

/// Every axiom of a finite quantum group with tracial Haar state, including
/// the axioms of the underlying *-algebra (prefixed "algebra.").
template <Scalar S>
Report verify_quantum_group(const QuantumGroup<S>& g);

/// Basis of the solution space of {(id⊗h)Δ(a) = h(a)1 for all a}.
template <Scalar S>
std::vector<Element<S>> haar_state_solutions(const StarAlgebra<S>& a, const LinearMap<S>& coproduct);

/// The unique invariant functional with h(1) = 1. Throws InvalidStructure when
/// it does not exist or is not unique.
template <Scalar S>
LinearMap<S> solve_haar_state(const StarAlgebra<S>& a, const LinearMap<S>& coproduct);

/// Basis of the solution space of {aη = ε(a)η for all a}.
template <Scalar S>
std::vector<Element<S>> haar_element_solutions(const StarAlgebra<S>& a, const LinearMap<S>& counit);

/// The unique η with aη = ε(a)η and ε(η) = 1. Throws InvalidStructure.
template <Scalar S>
Element<S> solve_haar_element(const StarAlgebra<S>& a, const LinearMap<S>& counit);
template <Scalar S>
Element<S> solve_haar_element(const QuantumGroup<S>& g) {
  return solve_haar_element(g.A(), g.counit);
}

/// S((id⊗h)(Δ(b)(1⊗c))) = (id⊗h)((1⊗b)Δ(c)) on all basis pairs (b, c).
template <Scalar S>
Report check_hw_identity(const QuantumGroup<S>& g);

/// Matrix [h(e_i e_j)]; also the matrix of the Fourier transform A → Â in
/// the dual basis.
template <Scalar S>
LinearMap<S> haar_pairing(const QuantumGroup<S>& g);

/// Gram matrix [h(e_i* e_j)] of the Haar state.
template <Scalar S>
LinearMap<S> haar_gram(const QuantumGroup<S>& g);

/// a ⋆ b = (h⊗id)(((S⊗id)Δ(b))(a⊗1)).
template <Scalar S>
Element<S> convolve(const QuantumGroup<S>& g, std::span<const S> a, std::span<const S> b);

/// a• = S(a*).
template <Scalar S>
Element<S> conv_adjoint(const QuantumGroup<S>& g, std::span<const S> a);

/// (A, ⋆, •) as a *-algebra with unit η/h(η).
template <Scalar S>
StarAlgebra<S> convolution_algebra(const QuantumGroup<S>& g);

/// Checks that phi: A → B is a bijective unital *-homomorphism intertwining
/// coproducts, counits, antipodes and Haar states.
template <Scalar S>
Report is_hopf_isomorphism(const QuantumGroup<S>& a, const QuantumGroup<S>& b, const LinearMap<S>& phi);

/// True when Δ_b ∘ phi = (phi⊗phi) ∘ Δ_a.
template <Scalar S>
bool intertwines_coproducts(const QuantumGroup<S>& a, const QuantumGroup<S>& b, const LinearMap<S>& phi);

/// True when phi is multiplicative, unital and *-preserving from a to b.
template <Scalar S>
bool is_star_homomorphism(const StarAlgebra<S>& a, const StarAlgebra<S>& b, const LinearMap<S>& phi);

}  // namespace fqg
