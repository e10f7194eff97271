#pragma once

#include <json.hpp>

#include "qhr/hopf.hpp"

namespace qhr {

inline constexpr const char* kToolVersion = "0.1.0";

/// One identity outcome with its source-equation anchor tag.
struct SuiteCheck {
  std::string name;
  std::string anchor;
  bool pass = true;
  std::string witness;
};

struct SuiteResult {
  std::string suite;
  std::string algebra;
  std::vector<SuiteCheck> checks;
  double wall_ms = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Valid suite names in CLI order: hopf, pairing, double, ybe, iota, moment,
/// reduction, rtt, all.
std::vector<std::string> suite_names();

/// Run one suite (or every suite for "all") on a verified Hopf algebra.
/// `heavy` unlocks the reduction suite for base dimension > 4; without it a
/// large reduction request throws Error. Unknown suites throw UnknownName.
std::vector<SuiteResult> run_suites(const std::string& suite, const HopfPtr& a, bool heavy);

nlohmann::json report_to_json(const std::vector<SuiteResult>& results);
std::string report_to_text(const std::vector<SuiteResult>& results);

}  // namespace qhr
