#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhr/linalg.hpp"

namespace qhr {

/// A finite-dimensional unital associative algebra given by structure
/// constants. Multiplication rows are stored sparsely: mult[i*dim+j] lists
/// the nonzero (k, c) with e_i e_j = sum_k c e_k.
struct Algebra {
  std::string name;
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<std::pair<int, Scalar>>> mult;
  std::vector<Scalar> unit;

  const std::vector<std::pair<int, Scalar>>& mult_row(int i, int j) const {
    return mult[static_cast<size_t>(i) * dim + j];
  }
  void set_mult(int i, int j, std::vector<std::pair<int, Scalar>> row) {
    mult[static_cast<size_t>(i) * dim + j] = std::move(row);
  }

  /// Checks associativity on all basis triples; returns the first failing
  /// triple as a string, or empty on success.
  std::string associativity_witness() const;
  std::string unit_witness() const;

  /// Matrix of left multiplication by the element with coefficients v.
  Matrix left_mult_matrix(const std::vector<Scalar>& v) const;
  Matrix right_mult_matrix(const std::vector<Scalar>& v) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of an algebra: a dense coefficient vector over its basis.
struct Element {
  AlgebraPtr alg;
  std::vector<Scalar> c;

  Element() = default;
  Element(AlgebraPtr a, std::vector<Scalar> coeffs);

  static Element zero(AlgebraPtr a);
  static Element unit(AlgebraPtr a);
  static Element basis(AlgebraPtr a, int i);

  bool is_zero() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& s) const;
  bool operator==(const Element& o) const;
};

/// An element of a tensor product of algebras. Coefficients are indexed by
/// the mixed-radix multi-index over the factor bases, row-major with the
/// first factor slowest.
struct TensorElement {
  std::vector<AlgebraPtr> factors;
  std::vector<Scalar> c;

  TensorElement() = default;
  TensorElement(std::vector<AlgebraPtr> fs, std::vector<Scalar> coeffs);

  static TensorElement zero(std::vector<AlgebraPtr> fs);
  static TensorElement unit(std::vector<AlgebraPtr> fs);

  size_t size() const { return c.size(); }
  FieldSpec field() const { return factors.at(0)->field; }

  /// Flat index from per-factor indices.
  size_t flat(const std::vector<int>& idx) const;
  std::vector<int> unflat(size_t flat_idx) const;

  bool is_zero() const;
  bool same_factors(const TensorElement& o) const;
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scaled(const Scalar& s) const;
  bool operator==(const TensorElement& o) const;
};

/// Product in the tensor-product algebra (factorwise multiplication with
/// multilinear expansion). Zero coefficients are skipped on both sides.
TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t);

/// Place `e` on the given legs of the ambient factor list, unit elsewhere.
TensorElement tensor_embed(const TensorElement& e, const std::vector<int>& legs,
                           const std::vector<AlgebraPtr>& ambient);
TensorElement tensor_embed(const Element& e, int leg, const std::vector<AlgebraPtr>& ambient);

/// Kronecker product of elements (e1 (x) e2 (x) ...).
TensorElement tensor_of(const std::vector<Element>& parts);

/// View a linear map as acting on one tensor leg: applies `m` to the
/// coefficients along `leg`, mapping into `target` on that leg.
TensorElement apply_on_leg(const TensorElement& t, const Matrix& m, int leg,
                           const AlgebraPtr& target);

}  // namespace qhr
