#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qhr/catalog.hpp"
#include "qhr/checks.hpp"
#include "qhr/doubles.hpp"
#include "qhr/io.hpp"

namespace {

using namespace qhr;

// "catalog:NAME" or a path to a Hopf algebra file
HopfPtr resolve_hopf(const std::string& target) {
  if (target.rfind("catalog:", 0) == 0) return catalog_build(target.substr(8));
  LoadedAlgebra la = load_algebra_file(target);
  if (!la.is_hopf)
    throw ParseError("'" + target + "' does not declare a Hopf structure (is_hopf: false)");
  return la.hopf;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write '" + out_path + "'");
  f << text;
}

int cmd_validate(const std::string& file) {
  LoadedAlgebra la;
  try {
    la = load_algebra_file(file);
  } catch (const AxiomFailure& e) {
    // structurally well-formed but algebraically broken (e.g. singular antipode)
    std::cout << file << ": axiom check FAILED -- " << e.what() << "\n";
    return 1;
  }
  if (!la.is_hopf) {
    std::cout << la.algebra->name << ": well-formed algebra file (no Hopf structure)\n";
    return 0;
  }
  AxiomReport rep = verify_hopf(la.hopf);
  for (const auto& c : rep.checks)
    std::cout << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL")
              << (c.witness.empty() ? "" : " -- " + c.witness) << "\n";
  std::cout << la.hopf->name << ": " << (rep.ok() ? "valid Hopf algebra" : "axiom check FAILED")
            << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_catalog_list() {
  for (const auto& n : catalog_names()) std::cout << n << "\n";
  return 0;
}

int cmd_catalog_emit(const std::string& name, const std::string& out_path) {
  HopfPtr h = catalog_build(name);
  write_text(out_path, canonical_dump(hopf_to_json(*h)));
  return 0;
}

int cmd_build(const std::string& kind, const std::string& target, const std::string& out_path) {
  HopfPtr a = resolve_hopf(target);
  nlohmann::json j;
  if (kind == "double") {
    j = hopf_to_json(*build_double_package(a, 2).drinfeld);
  } else if (kind == "dual") {
    j = hopf_to_json(*dual(a).first);
  } else if (kind == "tdual") {
    j = hopf_to_json(*build_double_package(a, 3).tdual);
  } else if (kind == "heisenberg") {
    j = algebra_to_json(*build_double_package(a, 1).heis->algebra);
  } else {
    throw UnknownName("unknown build kind '" + kind + "'");
  }
  write_text(out_path, canonical_dump(j));
  return 0;
}

int cmd_check(const std::string& suite, const std::string& target, const std::string& format,
              const std::string& out_path, bool heavy) {
  HopfPtr a = resolve_hopf(target);
  std::vector<SuiteResult> results = run_suites(suite, a, heavy);
  if (format == "json") {
    write_text(out_path, canonical_dump(report_to_json(results)));
  } else {
    write_text(out_path, report_to_text(results));
  }
  for (const auto& r : results)
    if (!r.ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for doubles of finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string file, name, kind, target, suite, out_path, format = "text";
  bool heavy = false;

  CLI::App* validate = app.add_subcommand("validate", "Structurally and axiomatically check a file");
  validate->add_option("file", file, "algebra file")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "Builtin example algebras");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog names");
  CLI::App* emit = catalog->add_subcommand("emit", "Write a catalog algebra to a file");
  emit->add_option("name", name, "catalog name")->required();
  emit->add_option("-o,--output", out_path, "output file (default: stdout)");

  CLI::App* build = app.add_subcommand("build", "Construct a derived algebra");
  build->add_option("kind", kind, "double | dual | tdual | heisenberg")
      ->required()
      ->check(CLI::IsMember({"double", "dual", "tdual", "heisenberg"}));
  build->add_option("input", target, "Hopf algebra file or catalog:NAME")->required();
  build->add_option("-o,--output", out_path, "output file (default: stdout)");

  CLI::App* check = app.add_subcommand("check", "Run an identity suite");
  check->add_option("suite", suite, "hopf | pairing | double | ybe | iota | moment | reduction | rtt | all")
      ->required()
      ->check(CLI::IsMember(qhr::suite_names()));
  check->add_option("input", target, "Hopf algebra file or catalog:NAME")->required();
  check->add_option("--report", format, "report format")->check(CLI::IsMember({"json", "text"}));
  check->add_option("-o,--output", out_path, "report file (default: stdout)");
  check->add_flag("--heavy", heavy, "unlock long-running reductions (base dim > 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*catalog) {
      if (catalog->got_subcommand("list")) return cmd_catalog_list();
      return cmd_catalog_emit(name, out_path);
    }
    if (*build) return cmd_build(kind, target, out_path);
    if (*check) return cmd_check(suite, target, format, out_path, heavy);
  } catch (const qhr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
