#include "qhr/checks.hpp"

#include <chrono>

#include "qhr/doubles.hpp"
#include "qhr/reduction.hpp"
#include "qhr/rtt.hpp"

namespace qhr {

using nlohmann::json;

namespace {

// source-equation anchor tags for traceable reports
std::string anchor_for(const std::string& name) {
  static const std::vector<std::pair<std::string, std::string>> prefixes = {
      {"pairing_", "pairing-axioms"},
      {"double_u_conjugation", "ref-sol"},
      {"double_", "drinfeld-mult"},
      {"r_inverse", "drinfeld-mult"},
      {"ybe", "drinfeld-mult"},
      {"tdual_", "drinfeld-mult"},
      {"heis_rel_", "heis-rels"},
      {"heis_", "heis-left"},
      {"rho_l_", "heis-left"},
      {"rho_r_", "heis-right"},
      {"iota_", "iota"},
      {"chiral_", "commuting-subs"},
      {"mu_l_", "red-action"},
      {"mu_r_abstract_", "mu-prime"},
      {"mu_r_explicit_", "hom"},
      {"moment_maps_commute", "commuting-subs"},
      {"d_on_a_", "d-on-a-dual"},
      {"pullback", "pullback"},
      {"augmentation_ideal", "quantum-res"},
      {"reduction_", "quantum-res"},
      {"invariant_dimension", "heis-iso"},
      {"reduced_", "heis-iso"},
      {"phi_", "inv-iso"},
      {"mu_r_descends", "one-more-action"},
      {"mu_r_central", "resid-action"},
      {"mu_r_residual", "hom"},
      {"r21_leg_swap", "heis-rels"},
      {"reflection_lhat_prime", "ref-eq"},
      {"reflection_lhat", "ref-sol"},
      {"reflection_l", "ref-eq"},
      {"mu_r_", "RTT-final"},
      {"theta_omega_u1", "RTT-final"},
      {"frt_lhat_prime_reflection", "ref-eq"},
      {"frt_", "RTT-final"},
      {"rtt_", "heis-rels"},
  };
  for (const auto& [p, a] : prefixes)
    if (name.rfind(p, 0) == 0) return a;
  return "hopf-axioms";
}

void merge(SuiteResult& out, const AxiomReport& rep, const std::string& prefix = {}) {
  for (const auto& c : rep.checks) {
    std::string name = prefix + c.name;
    out.checks.push_back({name, anchor_for(name), c.pass, c.witness});
  }
}

bool same_structure(const HopfPtr& x, const HopfPtr& y) {
  if (x->dim != y->dim || !(x->field == y->field)) return false;
  for (int i = 0; i < x->dim; ++i) {
    if (x->unit[i] != y->unit[i] || x->counit[i] != y->counit[i]) return false;
    for (int j = 0; j < x->dim; ++j) {
      std::vector<Scalar> a(x->dim, Scalar::zero(x->field)), b = a;
      for (const auto& [k, c] : x->mult_row(i, j)) a[k] += c;
      for (const auto& [k, c] : y->mult_row(i, j)) b[k] += c;
      if (a != b) return false;
    }
    std::vector<Scalar> da(static_cast<size_t>(x->dim) * x->dim, Scalar::zero(x->field)), db = da;
    for (const auto& [j, k, c] : x->comult_row(i)) da[static_cast<size_t>(j) * x->dim + k] += c;
    for (const auto& [j, k, c] : y->comult_row(i)) db[static_cast<size_t>(j) * y->dim + k] += c;
    if (da != db) return false;
  }
  return x->antipode == y->antipode;
}

void run_one(SuiteResult& out, const std::string& suite, const HopfPtr& a, bool heavy) {
  if (suite == "reduction" && !heavy && a->dim > 4)
    throw Error("reduction on a base of dimension > 4 requires --heavy");
  try {
    if (suite == "hopf") {
      merge(out, verify_hopf(a));
      out.checks.push_back({"dual_dual", "hopf-axioms",
                            same_structure(dual(dual(a).first).first, a),
                            ""});
      if (!out.checks.back().pass) out.checks.back().witness = "dual of dual differs from A";
      out.checks.push_back(
          {"op_op", "hopf-axioms", same_structure(twist(twist(a, Twist::op), Twist::op), a), ""});
      if (!out.checks.back().pass) out.checks.back().witness = "(A^op)^op differs from A";
      out.checks.push_back(
          {"cop_cop", "hopf-axioms", same_structure(twist(twist(a, Twist::cop), Twist::cop), a), ""});
      if (!out.checks.back().pass) out.checks.back().witness = "(A^cop)^cop differs from A";
    } else if (suite == "pairing") {
      merge(out, verify_pairing(dual(a).second), "pairing_");
    } else if (suite == "double") {
      DoublePackage pkg = build_double_package(a, 3);
      merge(out, check_double(pkg));
      merge(out, check_ybe(pkg));
      merge(out, check_tdual(pkg));
    } else if (suite == "ybe") {
      DoublePackage pkg = build_double_package(a, 2);
      merge(out, check_ybe(pkg));
    } else if (suite == "iota") {
      DoublePackage pkg = build_double_package(a, 1);
      merge(out, check_heisenberg(pkg));
    } else if (suite == "moment") {
      DoublePackage pkg = build_double_package(a, 4);
      merge(out, check_moment(pkg));
      merge(out, check_pullback(pkg));
    } else if (suite == "reduction") {
      DoublePackage pkg = build_double_package(a, 4);
      merge(out, check_reduction(pkg));
    } else if (suite == "rtt") {
      DoublePackage pkg = build_double_package(a, 4);
      merge(out, check_rtt(pkg));
    } else {
      throw UnknownName("unknown suite '" + suite + "'");
    }
  } catch (const UnknownName&) {
    throw;
  } catch (const Error& e) {
    out.checks.push_back({"construction", anchor_for(suite), false, e.what()});
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hopf", "pairing", "double", "ybe", "iota", "moment", "reduction", "rtt", "all"};
}

std::vector<SuiteResult> run_suites(const std::string& suite, const HopfPtr& a, bool heavy) {
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
    todo.pop_back();
  } else {
    todo = {suite};
  }
  std::vector<SuiteResult> results;
  for (const auto& s : todo) {
    SuiteResult r;
    r.suite = s;
    r.algebra = a->name;
    auto t0 = std::chrono::steady_clock::now();
    run_one(r, s, a, heavy);
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

json report_to_json(const std::vector<SuiteResult>& results) {
  json reports = json::array();
  for (const auto& r : results) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back(
          {{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"witness", c.witness}});
    }
    reports.push_back({{"suite", r.suite},
                       {"algebra", r.algebra},
                       {"pass", r.ok()},
                       {"wall_ms", r.wall_ms},
                       {"checks", checks}});
  }
  return json{{"version", kToolVersion}, {"reports", reports}};
}

std::string report_to_text(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.suite + " [" + r.algebra + "]\n";
    for (const auto& c : r.checks) {
      out += "  " + c.name + " (" + c.anchor + "): " + (c.pass ? "pass" : "FAIL") +
             (c.witness.empty() ? "" : " -- " + c.witness) + "\n";
    }
    out += "  => " + std::string(r.ok() ? "pass" : "FAIL") + " (" +
           std::to_string(r.wall_ms) + " ms)\n";
  }
  return out;
}

}  // namespace qhr
