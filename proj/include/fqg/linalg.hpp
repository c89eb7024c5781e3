#pragma once

#include <optional>
#include <vector>

#include "fqg/linear_map.hpp"

namespace fqg {

/// Rank of the span of the given vectors (all of equal length). The exact
/// backend clears denominators and runs fraction-free (Bareiss) elimination
/// over the Gaussian integers; the float backend uses partial pivoting with
/// the global tolerance scaled by the largest entry.
template <Scalar S>
std::size_t rank_of_span(const std::vector<Element<S>>& vectors);

template <Scalar S>
std::size_t rank(const LinearMap<S>& m);

/// Basis of {x : m x = 0}, in reduced form (one free coordinate equal to 1 per vector).
template <Scalar S>
std::vector<Element<S>> nullspace(const LinearMap<S>& m);

template <Scalar S>
std::optional<LinearMap<S>> inverse(const LinearMap<S>& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 0..n-1, computed by
/// Bareiss elimination without pivoting. Stops after the first zero minor.
template <Scalar S>
std::vector<S> leading_principal_minors(const LinearMap<S>& m);

template <Scalar S>
S determinant(const LinearMap<S>& m);

/// True when m equals its conjugate transpose.
template <Scalar S>
bool is_hermitian(const LinearMap<S>& m);

/// Sylvester's criterion on a Hermitian matrix: all leading principal minors
/// are real and strictly positive.
template <Scalar S>
bool is_positive_definite(const LinearMap<S>& m);

}  // namespace fqg
