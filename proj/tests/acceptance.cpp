// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria exercise the library end to end on the builtin catalog
// and the installed command-line binary (paths injected at compile time).

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qhr/catalog.hpp"
#include "qhr/checks.hpp"
#include "qhr/doubles.hpp"
#include "qhr/io.hpp"
#include "qhr/reduction.hpp"
#include "qhr/rtt.hpp"

using namespace qhr;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::vector<std::string> kSmall = {"trivial", "group:Z/2", "group:Z/3", "sweedler"};

int failures = 0;

void criterion(int n, const std::string& title, double budget_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_s > 0 && secs > budget_s) {
    ok = false;
    detail = "over time budget of " + std::to_string(budget_s) + " s";
  }
  std::ostringstream line;
  line << "criterion " << n << " (" << title << "): " << (ok ? "PASS" : "FAIL") << "  ["
       << secs << " s]";
  if (!ok && !detail.empty()) line << "  -- " << detail;
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

bool all_ok(const AxiomReport& rep, const std::string& ctx, std::string& detail) {
  if (rep.ok()) return true;
  detail = ctx + ": " + rep.first_failure();
  return false;
}

// --- criterion 10 helpers -------------------------------------------------

int run_cmd(const std::string& cmd) {
  int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Minimal validator for the subset of JSON Schema the shipped schema uses.
bool schema_validate(const json& schema, const json& value, std::string& why);

bool check_type(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "number") return v.is_number();
  return false;
}

bool schema_validate(const json& schema, const json& value, std::string& why) {
  if (schema.contains("type") && !check_type(schema["type"].get<std::string>(), value)) {
    why = "expected type " + schema["type"].get<std::string>();
    return false;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"])
      if (e == value) hit = true;
    if (!hit) {
      why = "value " + value.dump() + " not in enum";
      return false;
    }
  }
  if (value.is_string() && schema.contains("minLength") &&
      value.get<std::string>().size() < schema["minLength"].get<size_t>()) {
    why = "string shorter than minLength";
    return false;
  }
  if (value.is_number() && schema.contains("minimum") &&
      value.get<double>() < schema["minimum"].get<double>()) {
    why = "number below minimum";
    return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!value.contains(r.get<std::string>())) {
          why = "missing required field " + r.get<std::string>();
          return false;
        }
    const json props = schema.value("properties", json::object());
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!schema_validate(props[it.key()], it.value(), why)) {
          why = it.key() + ": " + why;
          return false;
        }
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        why = "unexpected field " + it.key();
        return false;
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<size_t>()) {
      why = "array shorter than minItems";
      return false;
    }
    if (schema.contains("items"))
      for (size_t i = 0; i < value.size(); ++i)
        if (!schema_validate(schema["items"], value[i], why)) {
          why = "item " + std::to_string(i) + ": " + why;
          return false;
        }
  }
  return true;
}

// --- criterion 9 helper ---------------------------------------------------

// Returns true when at least one of the Hopf / double / Heisenberg suites
// rejects the corrupted algebra.
bool corruption_detected(const HopfAlgebra& broken) {
  HopfPtr m;
  try {
    HopfAlgebra copy = broken;
    m = finalize_hopf(std::move(copy));
  } catch (const Error&) {
    return true;  // e.g. the corrupted antipode is singular
  }
  if (!verify_hopf(m).ok()) return true;
  try {
    DoublePackage pkg = build_double_package(m, 2);
    if (!check_double(pkg).ok() || !check_ybe(pkg).ok()) return true;
  } catch (const Error&) {
    return true;
  }
  try {
    DoublePackage pkg = build_double_package(m, 1);
    if (!check_heisenberg(pkg).ok()) return true;
  } catch (const Error&) {
    return true;
  }
  return false;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);

  criterion(1, "Hopf axioms, dual of dual, double opposite", 5.0, [](std::string& detail) {
    for (const auto& name : catalog_names()) {
      auto results = run_suites("hopf", catalog_build(name), false);
      if (!results[0].ok()) {
        detail = name + " failed the Hopf suite";
        return false;
      }
    }
    return true;
  });

  criterion(2, "pairing axioms and nondegeneracy", 5.0, [](std::string& detail) {
    std::vector<std::string> names = kSmall;
    names.push_back("taft:3");
    for (const auto& name : names) {
      HopfPtr a = catalog_build(name);
      if (!all_ok(verify_pairing(dual(a).second), name, detail)) return false;
    }
    return true;
  });

  criterion(3, "Drinfeld double suite", 15 * 60.0, [](std::string& detail) {
    std::vector<std::string> names = kSmall;
    names.push_back("taft:3");
    for (const auto& name : names) {
      auto t0 = std::chrono::steady_clock::now();
      DoublePackage pkg = build_double_package(catalog_build(name), 2);
      if (!all_ok(check_double(pkg), name, detail)) return false;
      if (!all_ok(check_ybe(pkg), name, detail)) return false;
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      double budget = name == "taft:3" ? 15 * 60.0 : 60.0;
      if (secs > budget) {
        detail = name + " exceeded per-algebra budget";
        return false;
      }
    }
    return true;
  });

  criterion(4, "dualized double matches the explicit dual", 60.0, [](std::string& detail) {
    for (const auto& name : kSmall) {
      DoublePackage pkg = build_double_package(catalog_build(name), 3);
      if (!all_ok(check_tdual(pkg), name, detail)) return false;
    }
    return true;
  });

  criterion(5, "Heisenberg double suite", 2 * 60.0, [](std::string& detail) {
    std::vector<std::string> names = kSmall;
    names.push_back("taft:3");
    for (const auto& name : names) {
      DoublePackage pkg = build_double_package(catalog_build(name), 1);
      if (!all_ok(check_heisenberg(pkg), name, detail)) return false;
    }
    return true;
  });

  criterion(6, "moment map suite", 5 * 60.0, [](std::string& detail) {
    for (const auto& name : kSmall) {
      DoublePackage pkg = build_double_package(catalog_build(name), 4);
      if (!all_ok(check_moment(pkg), name, detail)) return false;
      if (!all_ok(check_pullback(pkg), name, detail)) return false;
    }
    return true;
  });

  criterion(7, "quantum Hamiltonian reduction suite", 10 * 60.0, [](std::string& detail) {
    for (const std::string name : {"group:Z/2", "sweedler"}) {
      HopfPtr a = catalog_build(name);
      DoublePackage pkg = build_double_package(a, 4);
      AxiomReport rep = check_reduction(pkg);
      if (!all_ok(rep, name, detail)) return false;
      // the dimension check dim(reduction) = n^2 must actually have run
      bool saw_dim = false;
      for (const auto& c : rep.checks)
        if (c.name == "invariant_dimension") saw_dim = true;
      if (!saw_dim) {
        detail = name + ": reduction suite skipped the dimension check";
        return false;
      }
      (void)a;
    }
    return true;
  });

  criterion(8, "RTT and reflection suite", 10 * 60.0, [](std::string& detail) {
    for (const auto& name : kSmall) {
      DoublePackage pkg = build_double_package(catalog_build(name), 4);
      if (!all_ok(check_rtt(pkg), name, detail)) return false;
    }
    return true;
  });

  criterion(9, "mutation sensitivity", 5 * 60.0, [](std::string& detail) {
    HopfPtr good = catalog_build("sweedler");
    std::mt19937 rng(424242);
    int n = good->dim;
    std::set<std::tuple<int, int, int, int>> seen;
    int done = 0;
    while (done < 10) {
      std::uniform_int_distribution<int> kind_d(0, 2), idx(0, n - 1);
      int kind = kind_d(rng), i = idx(rng), j = idx(rng), k = idx(rng);
      if (!seen.insert({kind, i, j, k}).second) continue;
      HopfAlgebra broken = *good;
      Scalar one = Scalar::one(good->field);
      if (kind == 0) {
        broken.mult[static_cast<size_t>(i) * n + j].push_back({k, one});
      } else if (kind == 1) {
        broken.comult[i].emplace_back(j, k, one);
      } else {
        broken.antipode.at(i, j) += one;
      }
      if (!corruption_detected(broken)) {
        detail = "undetected mutation kind=" + std::to_string(kind) + " at (" +
                 std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        return false;
      }
      ++done;
    }
    return true;
  });

  criterion(10, "command-line contract", 10.0, [](std::string& detail) {
    const std::string cli = QHR_CLI_PATH;
    fs::path dir = fs::temp_directory_path() / ("qhr-acceptance-" + std::to_string(getpid()));
    fs::create_directories(dir);
    auto fail = [&](const std::string& why) {
      detail = why;
      fs::remove_all(dir);
      return false;
    };

    // round trip: emit -> load -> emit, byte identical
    fs::path sw = dir / "sweedler.json";
    if (run_cmd(cli + " catalog emit sweedler -o " + sw.string()) != 0)
      return fail("catalog emit failed");
    std::string emitted = slurp(sw);
    LoadedAlgebra la = load_algebra_file(sw.string());
    if (!la.is_hopf) return fail("emitted file lost the Hopf structure");
    if (canonical_dump(hopf_to_json(*la.hopf)) != emitted) return fail("round trip not byte-identical");

    // exit code 0 and schema-valid JSON report
    fs::path rep = dir / "report.json";
    if (run_cmd(cli + " check hopf catalog:trivial --report json -o " + rep.string()) != 0)
      return fail("check hopf catalog:trivial should exit 0");
    json schema = json::parse(slurp(QHR_SCHEMA_PATH));
    std::string why;
    if (!schema_validate(schema, json::parse(slurp(rep)), why))
      return fail("passing report violates schema: " + why);

    // exit code 1 on a failing check, with a schema-valid report
    json corrupt = hopf_to_json(*la.hopf);
    corrupt["antipode"][0][2] = "2";  // S(1) = 2, breaking the antipode axiom
    std::ofstream(dir / "corrupt.json") << canonical_dump(corrupt);
    if (run_cmd(cli + " validate " + (dir / "corrupt.json").string()) != 1)
      return fail("validate on a corrupted file should exit 1");
    fs::path bad_rep = dir / "bad_report.json";
    if (run_cmd(cli + " check hopf " + (dir / "corrupt.json").string() + " --report json -o " +
                bad_rep.string()) != 1)
      return fail("check on a corrupted file should exit 1");
    if (!schema_validate(schema, json::parse(slurp(bad_rep)), why))
      return fail("failing report violates schema: " + why);

    // exit code 2 on invalid input
    if (run_cmd(cli + " validate " + (dir / "missing.json").string()) != 2)
      return fail("validate on a missing file should exit 2");
    std::ofstream(dir / "garbage.json") << "{not json";
    if (run_cmd(cli + " validate " + (dir / "garbage.json").string()) != 2)
      return fail("validate on malformed JSON should exit 2");
    if (run_cmd(cli + " check hopf catalog:no-such-algebra") != 2)
      return fail("unknown catalog name should exit 2");
    if (run_cmd(cli + " check no-such-suite catalog:trivial") != 2)
      return fail("unknown suite should exit 2");

    fs::remove_all(dir);
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
