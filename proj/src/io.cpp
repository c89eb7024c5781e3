#include "fqg/io.hpp"

#include <fstream>
#include <sstream>

#include "fqg/error.hpp"

namespace fqg {

namespace {

std::string component_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return j.dump();
  throw ParseError("expected a number or numeric string, got " + j.dump());
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw ParseError(std::string(what) + " index out of range: " + j.dump());
  return static_cast<std::size_t>(j.get<long long>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t dim_field(const Json& j) {
  const auto& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() <= 0) throw ParseError("\"dim\" must be a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

// Runs a parser and turns json library exceptions into ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

template <Scalar S>
Json scalar_to_json(const S& s) {
  return Json::array({s.re_string(), s.im_string()});
}

template <Scalar S>
S scalar_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("scalar must be [re, im], got " + j.dump());
    return S::parse(component_text(j[0]), component_text(j[1]));
  }
  return S::parse(component_text(j));
}

template <Scalar S>
Json vector_to_json(std::span<const S> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

template <Scalar S>
Element<S> vector_from_json(const Json& j, std::size_t expected_dim) {
  if (!j.is_array() || j.size() != expected_dim)
    throw ParseError("expected a vector of length " + std::to_string(expected_dim));
  Element<S> out;
  out.reserve(expected_dim);
  for (const auto& v : j) out.push_back(scalar_from_json<S>(v));
  return out;
}

template <Scalar S>
Json matrix_to_json(const LinearMap<S>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json<S>(m.row(r)));
  return out;
}

template <Scalar S>
LinearMap<S> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  LinearMap<S> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = vector_from_json<S>(j[r], cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

template <Scalar S>
Json algebra_to_json(const StarAlgebra<S>& a) {
  Json mult = Json::array();
  for (const auto& c : a.structure_constants())
    mult.push_back(Json::array({c.i, c.j, c.k, c.coeff.re_string(), c.coeff.im_string()}));
  Json out;
  out["dim"] = a.dim();
  out["label"] = a.label();
  out["mult"] = std::move(mult);
  out["unit"] = vector_to_json<S>(a.unit());
  out["star"] = matrix_to_json(a.star_matrix());
  return out;
}

template <Scalar S>
StarAlgebra<S> algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    const std::size_t n = dim_field(j);
    std::vector<StructureConstant<S>> constants;
    for (const auto& e : field(j, "mult")) {
      if (!e.is_array() || (e.size() != 4 && e.size() != 5))
        throw ParseError("mult entry must be [i, j, k, re, im], got " + e.dump());
      const S coeff = e.size() == 5 ? S::parse(component_text(e[3]), component_text(e[4]))
                                    : S::parse(component_text(e[3]));
      constants.push_back({index_from_json(e[0], n, "mult"), index_from_json(e[1], n, "mult"),
                           index_from_json(e[2], n, "mult"), coeff});
    }
    auto unit = vector_from_json<S>(field(j, "unit"), n);
    auto star = matrix_from_json<S>(field(j, "star"), n, n);
    return StarAlgebra<S>::from_structure_constants(n, constants, std::move(unit), std::move(star),
                                                    j.value("label", std::string("A")));
  });
}

template <Scalar S>
Json quantum_group_to_json(const QuantumGroup<S>& g) {
  Json out = algebra_to_json(g.A());
  out["coproduct"] = matrix_to_json(g.coproduct);
  out["counit"] = matrix_to_json(g.counit);
  out["antipode"] = matrix_to_json(g.antipode);
  out["haar_state"] = matrix_to_json(g.haar_state);
  out["haar_element"] = vector_to_json<S>(g.haar_element);
  return out;
}

template <Scalar S>
QuantumGroup<S> quantum_group_from_json(const Json& j) {
  return guarded("quantum group", [&] {
    auto algebra = std::make_shared<const StarAlgebra<S>>(algebra_from_json<S>(j));
    const std::size_t n = algebra->dim();
    auto coproduct = matrix_from_json<S>(field(j, "coproduct"), n * n, n);
    auto counit = matrix_from_json<S>(field(j, "counit"), 1, n);
    auto antipode = matrix_from_json<S>(field(j, "antipode"), n, n);
    std::optional<LinearMap<S>> haar_state;
    std::optional<Element<S>> haar_element;
    if (j.contains("haar_state")) haar_state = matrix_from_json<S>(j.at("haar_state"), 1, n);
    if (j.contains("haar_element")) haar_element = vector_from_json<S>(j.at("haar_element"), n);
    return make_quantum_group<S>(std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode),
                                 std::move(haar_state), std::move(haar_element));
  });
}

template <Scalar S>
Json dual_pair_to_json(const DualPair<S>& p) {
  Json out;
  out["primal"] = quantum_group_to_json(*p.primal);
  out["dual"] = quantum_group_to_json(*p.dual);
  out["fourier"] = matrix_to_json(p.fourier);
  out["fourier_inverse"] = matrix_to_json(p.fourier_inverse);
  out["fourier_dual"] = matrix_to_json(p.fourier_dual);
  return out;
}

Json group_table_to_json(const FiniteGroup& g) {
  Json out;
  out["name"] = g.name();
  out["order"] = g.order();
  out["table"] = g.table();
  return out;
}

FiniteGroup group_table_from_json(const Json& j) {
  return guarded("group table", [&] {
    const auto& t = field(j, "table");
    if (!t.is_array() || t.empty()) throw ParseError("\"table\" must be a nonempty array of rows");
    const std::size_t n = t.size();
    if (j.contains("order") && j.at("order") != n) throw ParseError("\"order\" does not match the table size");
    GroupTable table(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (!t[a].is_array() || t[a].size() != n) throw ParseError("table row " + std::to_string(a) + " has wrong length");
      for (const auto& v : t[a]) table[a].push_back(index_from_json(v, n, "table"));
    }
    try {
      return FiniteGroup::from_table(std::move(table), j.value("name", std::string("G")));
    } catch (const InvalidStructure& e) {
      throw ParseError(std::string("table is not a group: ") + e.what());
    }
  });
}

namespace {

bool is_builtin(const Json& j) { return j.is_object() && j.contains("builtin"); }

template <Scalar S>
QuantumGroup<S> builtin_group(const Json& j) {
  const auto name = field(j, "builtin").get<std::string>();
  const auto kind = parse_group_kind(j.value("kind", std::string("fun")));
  return build_quantum_group<S>(named_group(name), kind);
}

template <Scalar S>
QuantumGroup<S> group_ref(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return quantum_group_from_json<S>(read_json_file(base_dir / j.get<std::string>()));
  if (is_builtin(j)) return builtin_group<S>(j);
  return quantum_group_from_json<S>(j);
}

template <Scalar S>
StarAlgebra<S> algebra_ref(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return algebra_from_json<S>(read_json_file(base_dir / j.get<std::string>()));
  if (is_builtin(j)) return builtin_group<S>(j).A();
  return algebra_from_json<S>(j);
}

}  // namespace

template <Scalar S>
Json family_to_json(const QuantumFamily<S>& qf) {
  Json out;
  out["label"] = qf.label;
  out["source"] = quantum_group_to_json(qf.G());
  out["target"] = algebra_to_json(qf.B());
  out["alpha"] = matrix_to_json(qf.alpha);
  if (qf.hopf_on_B) {
    Json h;
    h["coproduct"] = matrix_to_json(qf.hopf_on_B->coproduct);
    h["counit"] = matrix_to_json(qf.hopf_on_B->counit);
    out["hopf_on_B"] = std::move(h);
  }
  return out;
}

template <Scalar S>
QuantumFamily<S> family_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return guarded("family", [&] {
    auto source = std::make_shared<const QuantumGroup<S>>(group_ref<S>(field(j, "source"), base_dir));
    auto target = std::make_shared<const StarAlgebra<S>>(algebra_ref<S>(field(j, "target"), base_dir));
    const std::size_t na = source->dim(), nb = target->dim();
    auto alpha = matrix_from_json<S>(field(j, "alpha"), na * nb, na);
    std::optional<HopfData<S>> hopf;
    if (j.contains("hopf_on_B") && !j.at("hopf_on_B").is_null()) {
      const auto& h = j.at("hopf_on_B");
      if (is_builtin(h)) {
        const auto g = builtin_group<S>(h);
        if (g.dim() != nb) throw ParseError("hopf_on_B builtin does not match the dimension of the target");
        hopf = HopfData<S>{g.coproduct, g.counit};
      } else {
        hopf = HopfData<S>{matrix_from_json<S>(field(h, "coproduct"), nb * nb, nb),
                           matrix_from_json<S>(field(h, "counit"), 1, nb)};
      }
    }
    return QuantumFamily<S>{std::move(source), std::move(target), std::move(alpha), std::move(hopf),
                            j.value("label", std::string("family"))};
  });
}

Json report_to_json(const Report& r, const std::string& backend, double tolerance) {
  Json out;
  out["subject"] = r.subject();
  out["backend"] = backend;
  if (backend == "float") out["tolerance"] = tolerance;
  out["pass"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["failures"] = c.failures;
    e["witness"] = c.witness;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  return out;
}

std::string report_to_table(const Report& r) {
  std::ostringstream out;
  if (!r.subject().empty()) out << r.subject() << "\n";
  for (const auto& c : r.checks()) {
    out << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
    if (!c.pass) {
      if (!c.witness.empty()) {
        out << "  at (";
        for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? ", " : "") << c.witness[i];
        out << ")";
      }
      if (c.failures > 1) out << "  [" << c.failures << " failing]";
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (r.ok() ? "pass" : "FAIL") << "\n";
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

#define FQG_INSTANTIATE(S)                                                                     \
  template Json scalar_to_json<S>(const S&);                                                   \
  template S scalar_from_json<S>(const Json&);                                                 \
  template Json vector_to_json<S>(std::span<const S>);                                         \
  template Element<S> vector_from_json<S>(const Json&, std::size_t);                           \
  template Json matrix_to_json<S>(const LinearMap<S>&);                                        \
  template LinearMap<S> matrix_from_json<S>(const Json&, std::size_t, std::size_t);            \
  template Json algebra_to_json<S>(const StarAlgebra<S>&);                                     \
  template StarAlgebra<S> algebra_from_json<S>(const Json&);                                   \
  template Json quantum_group_to_json<S>(const QuantumGroup<S>&);                              \
  template QuantumGroup<S> quantum_group_from_json<S>(const Json&);                            \
  template Json dual_pair_to_json<S>(const DualPair<S>&);                                      \
  template Json family_to_json<S>(const QuantumFamily<S>&);                                    \
  template QuantumFamily<S> family_from_json<S>(const Json&, const std::filesystem::path&);

FQG_INSTANTIATE(Exact)
FQG_INSTANTIATE(Approx)

#undef FQG_INSTANTIATE

}  // namespace fqg
