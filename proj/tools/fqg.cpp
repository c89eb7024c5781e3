#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "fqg/error.hpp"
#include "fqg/selftest.hpp"

using namespace fqg;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

struct Options {
  std::string backend = "exact";
  double tol = Approx::default_tolerance;
  std::string format = "json";
  std::string output;
  bool skip_verify = false;
};

// Failure while loading or validating input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw InputError("cannot write " + opt.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const Options& opt, const Report& r) {
  return opt.format == "table" ? report_to_table(r) : dump(report_to_json(r, opt.backend, opt.tol));
}

template <class F>
auto load(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const fqg::Error& e) {
    throw InputError(what + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

FiniteGroup load_finite_group(const std::string& name, const std::string& table_path) {
  return load("group", [&] {
    if (!table_path.empty()) return group_table_from_json(read_json_file(table_path));
    if (name.empty()) throw ParseError("give --group NAME or --table FILE");
    return named_group(name);
  });
}

template <Scalar S>
GroupPtr<S> load_group(const std::string& path) {
  return load(path, [&] {
    return std::make_shared<const QuantumGroup<S>>(quantum_group_from_json<S>(read_json_file(path)));
  });
}

template <Scalar S>
QuantumFamily<S> load_family(const std::string& path) {
  return load(path, [&] {
    auto qf = family_from_json<S>(read_json_file(path), std::filesystem::path(path).parent_path());
    check_family_shape(qf);
    return qf;
  });
}

// Returns true when the group passes verification or verification is skipped;
// otherwise prints the report to stderr.
template <Scalar S>
bool verified(const Options& opt, const QuantumGroup<S>& g, const std::string& stage) {
  if (opt.skip_verify) return true;
  const auto r = verify_quantum_group(g);
  if (r.ok()) return true;
  std::cerr << "fqg: " << stage << ": " << g.label() << " is not a finite quantum group\n" << report_to_table(r);
  return false;
}

template <Scalar S>
int cmd_build(const Options& opt, const std::string& name, const std::string& table, const std::string& kind) {
  const auto g = load_finite_group(name, table);
  const auto k = load("kind", [&] { return parse_group_kind(kind); });
  emit(opt, dump(quantum_group_to_json(build_quantum_group<S>(g, k))));
  return exit_pass;
}

template <Scalar S>
int cmd_dual(const Options& opt, const std::string& path) {
  const auto g = load_group<S>(path);
  if (!verified(opt, *g, "verify")) return exit_fail;
  const auto p = load("dual", [&] { return build_dual(g); });
  emit(opt, dump(dual_pair_to_json(p)));
  return exit_pass;
}

template <Scalar S>
int cmd_verify(const Options& opt, const std::string& path, bool all) {
  const auto g = load_group<S>(path);
  Report report(g->label());
  report.merge(verify_quantum_group(*g));
  if (all && report.ok()) {
    const auto p = build_dual(g);
    report.merge(check_hw_identity(*g), "hw.");
    report.merge(verify_fourier_identities(p), "fourier.");
    report.merge(check_iteration_lemma(p), "iteration.");
    report.merge(check_double_dual(p), "double_dual.");
  }
  emit(opt, render(opt, report));
  return report.ok() ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_check_family(const Options& opt, const std::string& path, bool all) {
  const auto qf = load_family<S>(path);
  if (!verified(opt, qf.G(), "verify source")) return exit_fail;
  auto verdict = is_automorphism_family(qf);
  Report report(qf.label);
  report.merge(verdict.report);
  if (all) {
    const auto p = build_dual(qf.source);
    report.merge(check_convolution_preservation(qf), "convolution.");
    report.add("hat_formulas_agree", hat_by_definition(p, qf.alpha) == hat_by_fourier_inverse(p, qf.alpha));
    report.add("double_hat_identity", double_hat(qf) == double_hat_expected(qf));
    report.merge(verify_dual_equivalences(p, qf), "equivalence.");
    if (qf.hopf_on_B) report.merge(check_action(qf), "action.");
  }
  emit(opt, render(opt, report));
  return verdict.is_automorphism && report.ok() ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_aut(const Options& opt, const std::string& name, const std::string& table, const std::string& emit_path) {
  const auto g = load_finite_group(name, table);
  const auto auts = enumerate_automorphisms(g);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw InputError("cannot write " + emit_path);
    out << dump(family_to_json(universal_classical_family<S>(g)));
  }
  if (opt.format == "table") {
    std::ostringstream out;
    out << "Aut(" << g.name() << "): " << auts.size() << " automorphisms\n";
    for (const auto& psi : auts) {
      out << " ";
      for (auto v : psi) out << " " << v;
      out << "\n";
    }
    emit(opt, out.str());
  } else {
    Json j;
    j["group"] = g.name();
    j["order"] = g.order();
    j["count"] = auts.size();
    j["automorphisms"] = auts;
    emit(opt, dump(j));
  }
  return exit_pass;
}

template <Scalar S>
int cmd_relations(const Options& opt, const std::string& path, const std::string& scheme) {
  const auto qf = load_family<S>(path);
  if (!verified(opt, qf.G(), "verify source")) return exit_fail;
  const auto m = load("relations", [&] { return extract_matrix(qf); });
  Report report(qf.label);
  const auto needs = [&](GroupKind kind) {
    if (m.kind != kind)
      throw InputError("relations --scheme " + scheme + " needs a family on " +
                       (kind == GroupKind::function ? "F(Γ)" : "ℂ[Γ]"));
  };
  if (scheme == "auto") {
    needs(GroupKind::function);
    report.merge(check_pointwise_relations(m));
    report.merge(check_magic_unitary(m), "magic_unitary.");
  } else if (scheme == "order") {
    needs(GroupKind::function);
    report.merge(check_order_properties(m));
  } else if (scheme == "cyclic") {
    needs(GroupKind::function);
    if (!m.group.is_cyclic()) throw InputError("relations --scheme cyclic needs a cyclic group");
    report.merge(check_cyclic_identity(m));
  } else if (m.kind == GroupKind::function) {
    report.merge(check_dualact_consequences(m));
  } else {
    report.merge(load("relations", [&] { return check_dual_group_theorem(qf); }));
  }
  if (opt.format == "table") {
    emit(opt, "scheme " + scheme + "\n" + report_to_table(report));
  } else {
    Json j;
    j["scheme"] = scheme;
    j["subject"] = report.subject();
    j["pass"] = report.ok();
    Json witnesses = Json::array();
    for (const auto& c : report.violations()) {
      Json w;
      w["check"] = c.name;
      w["witness"] = c.witness;
      w["failures"] = c.failures;
      witnesses.push_back(std::move(w));
    }
    j["witnesses"] = std::move(witnesses);
    j["report"] = report_to_json(report, opt.backend, opt.tol);
    emit(opt, dump(j));
  }
  return report.ok() ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_compose(const Options& opt, const std::string& beta_path, const std::string& gamma_path, bool check) {
  const auto beta = load_family<S>(beta_path);
  const auto gamma = load_family<S>(gamma_path);
  if (!verified(opt, beta.G(), "verify source")) return exit_fail;
  const auto both = load("compose", [&] { return compose(beta, gamma); });
  if (!check) {
    emit(opt, dump(family_to_json(both)));
    return exit_pass;
  }
  if (opt.output.empty()) throw InputError("compose --check writes the family with -o FILE");
  emit(opt, dump(family_to_json(both)));
  const auto verdict = is_automorphism_family(both);
  std::cout << (opt.format == "table" ? report_to_table(verdict.report)
                                      : dump(report_to_json(verdict.report, opt.backend, opt.tol)));
  return verdict.is_automorphism ? exit_pass : exit_fail;
}

int cmd_selftest(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = selftest::run_criteria();
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (opt.format == "table") {
    std::string text;
    for (const auto& r : results) text += selftest::criterion_line(r);
    selftest::CriterionResult det{12, "determinism", true, 1, {}};
    if (dump(selftest::criteria_to_json(results)) != dump(selftest::criteria_to_json(selftest::run_criteria()))) {
      det.pass = false;
      det.failures.push_back("second run produced different JSON");
    }
    text += selftest::criterion_line(det);
    all = all && det.pass;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool fast = seconds < 60.0;
    std::ostringstream line;
    line << (fast ? "[PASS] " : "[FAIL] ") << "runtime " << std::fixed << std::setprecision(1) << seconds
         << " s (limit 60 s)\n";
    text += line.str();
    all = all && fast;
    emit(opt, text);
  } else {
    emit(opt, dump(selftest::criteria_to_json(results)));
  }
  return all ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite quantum groups and quantum families of automorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--backend", opt.backend, "Scalar backend")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", opt.tol, "Tolerance of the float backend")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--output", opt.output, "Write output to this file instead of stdout");
  app.add_flag("--skip-verify", opt.skip_verify, "Do not verify input quantum groups first");

  std::string group_name, table_path, kind = "fun", path, second_path, emit_path, scheme;
  bool all = false, check = false;

  auto* build = app.add_subcommand("build", "Build F(Γ) or ℂ[Γ]");
  build->add_option("--group", group_name, "Catalog group name (Z5, S3, D4, Q8, K4, Z2xZ4, ...)");
  build->add_option("--table", table_path, "Group table file")->check(CLI::ExistingFile);
  build->add_option("--kind", kind, "fun or grp")->check(CLI::IsMember({"fun", "grp"}));

  auto* dual = app.add_subcommand("dual", "Dual quantum group and Fourier transforms");
  dual->add_option("group", path, "Quantum group file")->required();

  auto* verify = app.add_subcommand("verify", "Check the quantum group axioms");
  verify->add_option("group", path, "Quantum group file")->required();
  verify->add_flag("--all", all, "Also check the Fourier identities and the dual");

  auto* family = app.add_subcommand("check-family", "Decide whether a family is a family of automorphisms");
  family->add_option("family", path, "Family file")->required();
  family->add_flag("--all", all, "Also check every convolution predicate, the hat maps and the action");

  auto* aut = app.add_subcommand("aut", "Enumerate Aut(Γ)");
  aut->add_option("--group", group_name, "Catalog group name");
  aut->add_option("--table", table_path, "Group table file")->check(CLI::ExistingFile);
  aut->add_option("--emit-family", emit_path, "Write the universal classical family to this file");

  auto* relations = app.add_subcommand("relations", "Check the relations of the matrix of a family on Γ");
  relations->add_option("family", path, "Family file")->required();
  relations->add_option("--scheme", scheme, "auto, order, cyclic or dual")
      ->required()
      ->check(CLI::IsMember({"auto", "order", "cyclic", "dual"}));

  auto* comp = app.add_subcommand("compose", "Compose two families: (β⊗id)∘γ");
  comp->add_option("beta", path, "Family β")->required();
  comp->add_option("gamma", second_path, "Family γ")->required();
  comp->add_flag("--check", check, "Print the automorphism report of the composition");

  auto* self = app.add_subcommand("selftest", "Run the built-in acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_input;
  }

  if (opt.backend == "float") Approx::set_tolerance(opt.tol);
  const bool exact = opt.backend == "exact";
  try {
    if (*build)
      return exact ? cmd_build<Exact>(opt, group_name, table_path, kind)
                   : cmd_build<Approx>(opt, group_name, table_path, kind);
    if (*dual) return exact ? cmd_dual<Exact>(opt, path) : cmd_dual<Approx>(opt, path);
    if (*verify) return exact ? cmd_verify<Exact>(opt, path, all) : cmd_verify<Approx>(opt, path, all);
    if (*family) return exact ? cmd_check_family<Exact>(opt, path, all) : cmd_check_family<Approx>(opt, path, all);
    if (*aut)
      return exact ? cmd_aut<Exact>(opt, group_name, table_path, emit_path)
                   : cmd_aut<Approx>(opt, group_name, table_path, emit_path);
    if (*relations) return exact ? cmd_relations<Exact>(opt, path, scheme) : cmd_relations<Approx>(opt, path, scheme);
    if (*comp)
      return exact ? cmd_compose<Exact>(opt, path, second_path, check)
                   : cmd_compose<Approx>(opt, path, second_path, check);
    if (*self) return cmd_selftest(opt);
  } catch (const InputError& e) {
    std::cerr << "fqg " << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "fqg " << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
