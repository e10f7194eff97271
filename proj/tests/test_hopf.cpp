#include <doctest.h>

#include "qhr/catalog.hpp"
#include "qhr/checks.hpp"

using namespace qhr;

namespace {

Element apply_antipode(const HopfPtr& h, const Element& e) {
  return Element(h, h->antipode.apply(e.c));
}

}  // namespace

TEST_CASE("every catalog algebra passes the Hopf axioms") {
  for (const auto& name : catalog_names()) {
    HopfPtr a = catalog_build(name);
    AxiomReport rep = verify_hopf(a);
    INFO(name);
    CHECK(rep.ok());
  }
}

TEST_CASE("sweedler structure constants match hand-derived values") {
  HopfPtr a = catalog_build("sweedler");
  FieldSpec f = a->field;
  // basis order: 0 = 1, 1 = x, 2 = g, 3 = g*x
  REQUIRE(a->dim == 4);
  CHECK(a->basis == std::vector<std::string>{"1", "x", "g", "g*x"});

  Element one = Element::basis(a, 0), x = Element::basis(a, 1), g = Element::basis(a, 2),
          gx = Element::basis(a, 3);

  CHECK(g * g == one);            // g^2 = 1
  CHECK((x * x).is_zero());       // x^2 = 0
  CHECK(x * g == gx.scaled(Scalar::of_int(f, -1)));  // xg = -gx
  CHECK(g * x == gx);

  // Delta(x) = x (x) 1 + g (x) x
  TensorElement dx = coproduct(a, x);
  TensorElement expected = tensor_of({x, one}) + tensor_of({g, x});
  CHECK(dx == expected);
  // Delta(g) = g (x) g
  CHECK(coproduct(a, g) == tensor_of({g, g}));

  // counit: eps(1) = eps(g) = 1, eps(x) = eps(gx) = 0
  CHECK(a->counit[0] == Scalar::one(f));
  CHECK(a->counit[2] == Scalar::one(f));
  CHECK(a->counit[1].is_zero());
  CHECK(a->counit[3].is_zero());

  // S(g) = g, S(x) = -gx, S(gx) = x
  CHECK(apply_antipode(a, g) == g);
  CHECK(apply_antipode(a, x) == gx.scaled(Scalar::of_int(f, -1)));
  CHECK(apply_antipode(a, gx) == x);
}

TEST_CASE("sweedler antipode has order four") {
  HopfPtr a = catalog_build("sweedler");
  Matrix s = a->antipode;
  Matrix s2 = s * s;
  CHECK(!s2.is_identity());
  // S^2(x) = -x
  Element x = Element::basis(a, 1);
  CHECK(Element(a, s2.apply(x.c)) == x.scaled(Scalar::of_int(a->field, -1)));
  CHECK((s2 * s2).is_identity());
}

TEST_CASE("taft:2 equals sweedler after zeta_2 = -1") {
  HopfPtr t = catalog_build("taft:2");
  HopfPtr s = catalog_build("sweedler");
  REQUIRE(t->dim == s->dim);
  // phi(2) = 1, so each taft:2 scalar is a single rational coefficient
  auto as_q = [](const Scalar& sc) { return sc.coeffs().at(0); };
  for (int i = 0; i < s->dim; ++i) {
    for (int j = 0; j < s->dim; ++j) {
      std::vector<mpq_class> rt(s->dim, 0), rs(s->dim, 0);
      for (const auto& [k, c] : t->mult_row(i, j)) rt[k] += as_q(c);
      for (const auto& [k, c] : s->mult_row(i, j)) rs[k] += as_q(c);
      CHECK(rt == rs);
    }
    std::vector<mpq_class> ct(static_cast<size_t>(s->dim) * s->dim, 0), cs = ct;
    for (const auto& [j, k, c] : t->comult_row(i)) ct[static_cast<size_t>(j) * s->dim + k] += as_q(c);
    for (const auto& [j, k, c] : s->comult_row(i)) cs[static_cast<size_t>(j) * s->dim + k] += as_q(c);
    CHECK(ct == cs);
    CHECK(as_q(t->counit[i]) == as_q(s->counit[i]));
    for (int j = 0; j < s->dim; ++j)
      CHECK(as_q(t->antipode.at(i, j)) == as_q(s->antipode.at(i, j)));
  }
}

TEST_CASE("canonical pairings satisfy the axioms") {
  for (const std::string& name : {"trivial", "group:Z/2", "group:Z/3", "sweedler", "taft:3"}) {
    HopfPtr a = catalog_build(name);
    AxiomReport rep = verify_pairing(dual(a).second);
    INFO(name);
    CHECK(rep.ok());
  }
}

TEST_CASE("dual of dual and double opposites recover the original") {
  for (const std::string& name : {"group:Z/3", "sweedler", "group:S3"}) {
    HopfPtr a = catalog_build(name);
    auto results = run_suites("hopf", a, false);
    REQUIRE(results.size() == 1);
    INFO(name);
    CHECK(results[0].ok());
  }
}

TEST_CASE("group algebra duals are the function algebras") {
  HopfPtr g = catalog_build("group:Z/3");
  auto [d, p] = dual(g);
  // dual basis elements are orthogonal idempotents summing to the unit
  for (int i = 0; i < d->dim; ++i)
    for (int j = 0; j < d->dim; ++j) {
      Element prod = Element::basis(d, i) * Element::basis(d, j);
      if (i == j)
        CHECK(prod == Element::basis(d, i));
      else
        CHECK(prod.is_zero());
    }
}
