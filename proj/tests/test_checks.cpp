#include <doctest.h>

#include "qhr/catalog.hpp"
#include "qhr/checks.hpp"

using namespace qhr;

TEST_CASE("all suites pass on the trivial algebra") {
  HopfPtr a = catalog_build("trivial");
  auto results = run_suites("all", a, false);
  CHECK(results.size() == suite_names().size() - 1);
  for (const auto& r : results) {
    INFO(r.suite);
    CHECK(r.ok());
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("unknown suite names are rejected") {
  HopfPtr a = catalog_build("trivial");
  CHECK_THROWS_AS(run_suites("frobnicate", a, false), UnknownName);
}

TEST_CASE("reduction on a large base is gated") {
  HopfPtr a = catalog_build("taft:3");
  CHECK_THROWS_AS(run_suites("reduction", a, false), Error);
}

TEST_CASE("reports carry names, anchors, and pass flags") {
  HopfPtr a = catalog_build("group:Z/2");
  auto results = run_suites("hopf", a, false);
  REQUIRE(results.size() == 1);
  for (const auto& c : results[0].checks) {
    CHECK(!c.name.empty());
    CHECK(!c.anchor.empty());
    CHECK(c.pass);
  }

  nlohmann::json j = report_to_json(results);
  CHECK(j.at("version").get<std::string>() == kToolVersion);
  REQUIRE(j.at("reports").size() == 1);
  const auto& rep = j.at("reports")[0];
  CHECK(rep.at("suite") == "hopf");
  CHECK(rep.at("algebra") == "group:Z/2");
  CHECK(rep.at("pass").get<bool>());
  CHECK(rep.at("wall_ms").get<double>() >= 0);
  for (const auto& c : rep.at("checks")) {
    CHECK(c.at("pass").get<bool>());
    CHECK(c.at("witness").get<std::string>().empty());
  }

  std::string text = report_to_text(results);
  CHECK(text.find("hopf [group:Z/2]") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("a broken algebra produces a failing check with a witness") {
  HopfPtr good = catalog_build("sweedler");
  HopfAlgebra bad = *good;
  // corrupt one multiplication constant: g*g = 1 becomes g*g = 1 + x
  bad.mult[static_cast<size_t>(2) * 4 + 2].push_back({1, Scalar::one(bad.field)});
  HopfPtr badp = finalize_hopf(std::move(bad));

  auto results = run_suites("hopf", badp, false);
  REQUIRE(results.size() == 1);
  CHECK(!results[0].ok());
  bool witnessed = false;
  for (const auto& c : results[0].checks)
    if (!c.pass && !c.witness.empty()) witnessed = true;
  CHECK(witnessed);

  // the double construction fail-fasts, which the suite reports as a failure
  auto dresults = run_suites("double", badp, false);
  REQUIRE(dresults.size() == 1);
  CHECK(!dresults[0].ok());
}
