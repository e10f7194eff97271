#pragma once

#include <optional>
#include <vector>

#include "qhr/scalar.hpp"

namespace qhr {

/// Dense matrix of exact scalars over a single field.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const FieldSpec& spec);

  static Matrix identity(int n, const FieldSpec& spec);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return spec_; }

  Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  /// Apply to a coefficient vector (length = cols).
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_, cols_;
  FieldSpec spec_;
  std::vector<Scalar> data_;
};

/// Exact basis of the right null space. Rational matrices go through a
/// fraction-free (Bareiss) forward elimination; cyclotomic ones use plain
/// division-based elimination.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

int rank(const Matrix& m);

/// Solve M x = rhs; empty optional when no solution exists.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

/// Exact inverse; throws Singular.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(Matrix& m);

}  // namespace qhr
