#include <doctest.h>

#include <random>

#include "qhr/linalg.hpp"

using namespace qhr;

namespace {

std::mt19937 rng(987123);

Scalar random_scalar(const FieldSpec& f) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<mpq_class> c(f.degree());
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return Scalar(f, std::move(c));
}

Matrix random_matrix(int r, int c, const FieldSpec& f) {
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = random_scalar(f);
  return m;
}

std::vector<Scalar> matvec(const Matrix& m, const std::vector<Scalar>& v) { return m.apply(v); }

}  // namespace

TEST_CASE("inverse round trip over Q and Q(zeta_4)") {
  for (FieldSpec f : {FieldSpec::rational(), FieldSpec::cyclotomic(4)}) {
    int found = 0;
    while (found < 5) {
      Matrix m = random_matrix(5, 5, f);
      try {
        Matrix mi = inverse(m);
        CHECK((m * mi).is_identity());
        CHECK((mi * m).is_identity());
        ++found;
      } catch (const Singular&) {
        // resample; random matrices are occasionally singular
      }
    }
  }
}

TEST_CASE("solve produces an exact solution when one exists") {
  for (FieldSpec f : {FieldSpec::rational(), FieldSpec::cyclotomic(3)}) {
    for (int t = 0; t < 10; ++t) {
      Matrix m = random_matrix(6, 4, f);
      std::vector<Scalar> x0;
      for (int j = 0; j < 4; ++j) x0.push_back(random_scalar(f));
      std::vector<Scalar> rhs = matvec(m, x0);
      auto x = solve(m, rhs);
      REQUIRE(x.has_value());
      CHECK(matvec(m, *x) == rhs);
    }
  }
}

TEST_CASE("solve reports unsolvable systems") {
  FieldSpec f = FieldSpec::rational();
  Matrix m(2, 1, f);
  m.at(0, 0) = Scalar::one(f);
  m.at(1, 0) = Scalar::one(f);
  std::vector<Scalar> rhs = {Scalar::one(f), Scalar::of_int(f, 2)};
  CHECK(!solve(m, rhs).has_value());
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
  for (FieldSpec f : {FieldSpec::rational(), FieldSpec::cyclotomic(5)}) {
    for (int t = 0; t < 8; ++t) {
      Matrix m = random_matrix(4, 7, f);
      auto null_basis = kernel(m);
      int r = rank(m);
      CHECK(r + static_cast<int>(null_basis.size()) == m.cols());
      for (const auto& v : null_basis) {
        std::vector<Scalar> image = matvec(m, v);
        for (const auto& s : image) CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("rref pivots and idempotence") {
  FieldSpec f = FieldSpec::rational();
  for (int t = 0; t < 8; ++t) {
    Matrix m = random_matrix(5, 6, f);
    Matrix m1 = m;
    std::vector<int> pivots = rref(m1);
    CHECK(static_cast<int>(pivots.size()) == rank(m));
    Matrix m2 = m1;
    std::vector<int> pivots2 = rref(m2);
    CHECK(pivots == pivots2);
    CHECK(m1 == m2);
  }
}

TEST_CASE("hand-computed 2x2 inverse") {
  FieldSpec f = FieldSpec::rational();
  Matrix m(2, 2, f);
  m.at(0, 0) = Scalar::of_int(f, 1);
  m.at(0, 1) = Scalar::of_int(f, 2);
  m.at(1, 0) = Scalar::of_int(f, 3);
  m.at(1, 1) = Scalar::of_int(f, 4);
  Matrix mi = inverse(m);
  // inverse = [[-2, 1], [3/2, -1/2]]
  CHECK(mi.at(0, 0) == Scalar::of_int(f, -2));
  CHECK(mi.at(0, 1) == Scalar::of_int(f, 1));
  CHECK(mi.at(1, 0) == Scalar::of_rational(f, mpq_class(3, 2)));
  CHECK(mi.at(1, 1) == Scalar::of_rational(f, mpq_class(-1, 2)));
}
