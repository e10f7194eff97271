#include <doctest.h>

#include "qhr/catalog.hpp"
#include "qhr/doubles.hpp"
#include "qhr/io.hpp"

using namespace qhr;

TEST_CASE("emit, load, emit is byte-identical for every catalog algebra") {
  for (const auto& name : catalog_names()) {
    HopfPtr h = catalog_build(name);
    std::string first = canonical_dump(hopf_to_json(*h));
    LoadedAlgebra la = algebra_from_json(nlohmann::json::parse(first));
    REQUIRE(la.is_hopf);
    std::string second = canonical_dump(hopf_to_json(*la.hopf));
    INFO(name);
    CHECK(first == second);
  }
}

TEST_CASE("reloaded algebras still pass verification") {
  for (const std::string& name : {"sweedler", "taft:3", "group:S3"}) {
    HopfPtr h = catalog_build(name);
    LoadedAlgebra la = algebra_from_json(hopf_to_json(*h));
    AxiomReport rep = verify_hopf(la.hopf);
    INFO(name);
    CHECK(rep.ok());
  }
}

TEST_CASE("plain algebra files round trip without Hopf fields") {
  HopfPtr h = catalog_build("group:Z/2");
  nlohmann::json j = algebra_to_json(*h);  // forget the Hopf structure
  LoadedAlgebra la = algebra_from_json(j);
  CHECK(!la.is_hopf);
  CHECK(la.hopf == nullptr);
  CHECK(la.algebra->dim == 2);
  CHECK(canonical_dump(algebra_to_json(*la.algebra)) == canonical_dump(j));
}

TEST_CASE("malformed files raise ParseError") {
  HopfPtr h = catalog_build("sweedler");
  nlohmann::json good = hopf_to_json(*h);

  nlohmann::json bad = good;
  bad.erase("mult");
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);

  bad = good;
  bad["mult"][0][2] = 99;  // index out of range
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);

  bad = good;
  bad["dim"] = -1;
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);

  bad = good;
  bad["field"]["kind"] = "septimal";
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);

  bad = good;
  bad["unit"] = nlohmann::json::array({"1"});  // wrong length
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);

  CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("a serialized Drinfeld double reloads as a valid Hopf algebra") {
  DoublePackage pkg = build_double_package(catalog_build("group:Z/3"), 2);
  LoadedAlgebra la = algebra_from_json(hopf_to_json(*pkg.drinfeld));
  REQUIRE(la.is_hopf);
  CHECK(verify_hopf(la.hopf).ok());
  CHECK(la.hopf->dim == 9);
}

TEST_CASE("scalar strings survive a cyclotomic round trip") {
  HopfPtr t = catalog_build("taft:3");
  LoadedAlgebra la = algebra_from_json(hopf_to_json(*t));
  REQUIRE(la.is_hopf);
  CHECK(la.hopf->field == FieldSpec::cyclotomic(3));
  CHECK(la.hopf->antipode == t->antipode);
}
