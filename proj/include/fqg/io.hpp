#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fqg/classical_aut.hpp"

namespace fqg {

using Json = nlohmann::ordered_json;

// File formats. Scalars are ["re", "im"] pairs of rational strings ("p/q" or
// decimal); a bare string or number is read as a real scalar. Matrices are
// arrays of rows.
//
//   algebra:  {"dim", "label", "mult": [[i, j, k, re, im], ...], "unit", "star"}
//   group:    algebra fields + "coproduct", "counit", "antipode",
//             optional "haar_state", "haar_element"
//   table:    {"order", "table": [[...], ...], optional "name"}
//   family:   {"label", "source", "target", "alpha", optional "hopf_on_B"}
//
// A family source is an inline group, a path to a group file (relative to the
// family file), or {"builtin": "S3", "kind": "fun"}; the target is an inline
// algebra or the same kind of builtin reference.

template <Scalar S>
Json scalar_to_json(const S& s);
template <Scalar S>
S scalar_from_json(const Json& j);

template <Scalar S>
Json vector_to_json(std::span<const S> v);
template <Scalar S>
Element<S> vector_from_json(const Json& j, std::size_t expected_dim);

template <Scalar S>
Json matrix_to_json(const LinearMap<S>& m);
template <Scalar S>
LinearMap<S> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

template <Scalar S>
Json algebra_to_json(const StarAlgebra<S>& a);
template <Scalar S>
StarAlgebra<S> algebra_from_json(const Json& j);

template <Scalar S>
Json quantum_group_to_json(const QuantumGroup<S>& g);
template <Scalar S>
QuantumGroup<S> quantum_group_from_json(const Json& j);

template <Scalar S>
Json dual_pair_to_json(const DualPair<S>& p);

Json group_table_to_json(const FiniteGroup& g);
FiniteGroup group_table_from_json(const Json& j);

template <Scalar S>
Json family_to_json(const QuantumFamily<S>& qf);
template <Scalar S>
QuantumFamily<S> family_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"subject", "backend", ["tolerance"], "pass", "checks": [...]}. The
/// tolerance appears only for the float backend.
Json report_to_json(const Report& r, const std::string& backend, double tolerance);

/// Human-readable table, one check per line.
std::string report_to_table(const Report& r);

/// Parses a JSON file; throws ParseError with the path on failure.
Json read_json_file(const std::filesystem::path& path);

}  // namespace fqg
