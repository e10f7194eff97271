#include <doctest.h>

#include <random>

#include "qhr/catalog.hpp"

using namespace qhr;

namespace {

std::mt19937 rng(5551212);

TensorElement random_tensor(const std::vector<AlgebraPtr>& fs) {
  TensorElement t = TensorElement::zero(fs);
  std::uniform_int_distribution<int> num(-3, 3);
  FieldSpec f = fs[0]->field;
  for (auto& c : t.c) c = Scalar::of_int(f, num(rng));
  return t;
}

}  // namespace

TEST_CASE("tensor product algebra is associative and unital on random triples") {
  HopfPtr a = catalog_build("sweedler");
  std::vector<AlgebraPtr> fs = {a, a};
  TensorElement one = TensorElement::unit(fs);
  for (int t = 0; t < 40; ++t) {
    TensorElement x = random_tensor(fs), y = random_tensor(fs), z = random_tensor(fs);
    CHECK(tensor_multiply(tensor_multiply(x, y), z) == tensor_multiply(x, tensor_multiply(y, z)));
    CHECK(tensor_multiply(one, x) == x);
    CHECK(tensor_multiply(x, one) == x);
  }
}

TEST_CASE("tensor product distributes over addition") {
  HopfPtr a = catalog_build("group:Z/3");
  std::vector<AlgebraPtr> fs = {a, a, a};
  for (int t = 0; t < 20; ++t) {
    TensorElement x = random_tensor(fs), y = random_tensor(fs), z = random_tensor(fs);
    CHECK(tensor_multiply(x, y + z) == tensor_multiply(x, y) + tensor_multiply(x, z));
  }
}

TEST_CASE("tensor_of agrees with embedding and multiplying") {
  HopfPtr a = catalog_build("sweedler");
  std::vector<AlgebraPtr> fs = {a, a};
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < a->dim; ++j) {
      Element ei = Element::basis(a, i), ej = Element::basis(a, j);
      TensorElement direct = tensor_of({ei, ej});
      TensorElement embedded =
          tensor_multiply(tensor_embed(ei, 0, fs), tensor_embed(ej, 1, fs));
      CHECK(direct == embedded);
      // flat index convention: first factor slowest
      CHECK(direct.c[direct.flat({i, j})] == Scalar::one(a->field));
    }
}

TEST_CASE("apply_on_leg with the identity is a no-op") {
  HopfPtr a = catalog_build("group:Z/4");
  std::vector<AlgebraPtr> fs = {a, a};
  Matrix id = Matrix::identity(a->dim, a->field);
  for (int t = 0; t < 10; ++t) {
    TensorElement x = random_tensor(fs);
    CHECK(apply_on_leg(x, id, 0, a) == x);
    CHECK(apply_on_leg(x, id, 1, a) == x);
  }
}

TEST_CASE("left and right multiplication matrices represent the product") {
  HopfPtr a = catalog_build("sweedler");
  for (int i = 0; i < a->dim; ++i) {
    Element ei = Element::basis(a, i);
    Matrix li = a->left_mult_matrix(ei.c);
    Matrix ri = a->right_mult_matrix(ei.c);
    for (int j = 0; j < a->dim; ++j) {
      Element ej = Element::basis(a, j);
      CHECK((ei * ej).c == li.apply(ej.c));
      CHECK((ej * ei).c == ri.apply(ej.c));
    }
  }
}

TEST_CASE("associativity witness is empty for catalog algebras") {
  for (const std::string& name : {"trivial", "group:S3", "sweedler"}) {
    HopfPtr a = catalog_build(name);
    CHECK(a->associativity_witness().empty());
    CHECK(a->unit_witness().empty());
  }
}
