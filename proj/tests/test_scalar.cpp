#include <doctest.h>

#include <map>
#include <random>

#include "qhr/scalar.hpp"

using namespace qhr;

namespace {

// Independent oracle for Phi_n: recursive exact polynomial division of
// x^n - 1 by the cyclotomic polynomials of the proper divisors of n.
std::vector<mpz_class> phi_oracle(int n) {
  static std::map<int, std::vector<mpz_class>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // numerator x^n - 1
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<mpz_class> div = phi_oracle(d);
    // exact long division num / div (both monic in the relevant sense)
    std::vector<mpz_class> quo(num.size() - div.size() + 1, 0);
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
      mpz_class lead = num[k + div.size() - 1];
      quo[k] = lead;  // div is monic
      for (size_t m = 0; m < div.size(); ++m) num[k + m] -= lead * div[m];
    }
    for (size_t m = 0; m + 1 < div.size(); ++m) REQUIRE(num[m] == 0);  // exact division
    num = quo;
  }
  memo[n] = num;
  return num;
}

std::mt19937 rng(20240817);

mpq_class random_rational() {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Scalar random_scalar(const FieldSpec& f) {
  std::vector<mpq_class> c(f.degree());
  for (auto& x : c) x = random_rational();
  return Scalar(f, std::move(c));
}

void field_axiom_battery(const FieldSpec& f, int trials) {
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  for (int t = 0; t < trials; ++t) {
    Scalar a = random_scalar(f), b = random_scalar(f), c = random_scalar(f);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == one);
      CHECK(a / a == one);
    }
    CHECK(Scalar::parse(f, a.to_string()) == a);
  }
}

}  // namespace

TEST_CASE("euler phi small values") {
  int expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int n = 1; n <= 12; ++n) CHECK(euler_phi(n) == expected[n - 1]);
}

TEST_CASE("cyclotomic polynomials match the division oracle") {
  for (int n = 1; n <= 30; ++n) {
    std::vector<mpz_class> got = cyclotomic_polynomial(n);
    std::vector<mpz_class> want = phi_oracle(n);
    REQUIRE(got.size() == want.size());
    REQUIRE(static_cast<int>(got.size()) == euler_phi(n) + 1);
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("known cyclotomic polynomials") {
  // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
}

TEST_CASE("rational field axioms on random triples") {
  field_axiom_battery(FieldSpec::rational(), 500);
}

TEST_CASE("cyclotomic field axioms on random triples") {
  field_axiom_battery(FieldSpec::cyclotomic(3), 200);
  field_axiom_battery(FieldSpec::cyclotomic(5), 200);
  field_axiom_battery(FieldSpec::cyclotomic(12), 200);
}

TEST_CASE("zeta has the right multiplicative order") {
  for (int n : {2, 3, 4, 5, 6, 12}) {
    FieldSpec f = FieldSpec::cyclotomic(n);
    Scalar z = Scalar::zeta(f);
    CHECK(z.pow(n) == Scalar::one(f));
    for (int k = 1; k < n; ++k) CHECK(z.pow(k) != Scalar::one(f));
  }
}

TEST_CASE("mixed-field arithmetic is rejected") {
  Scalar a = Scalar::one(FieldSpec::rational());
  Scalar b = Scalar::one(FieldSpec::cyclotomic(3));
  CHECK_THROWS_AS(a + b, FieldMismatch);
}
