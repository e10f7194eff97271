#include "qhr/linalg.hpp"

namespace qhr {

Matrix::Matrix(int rows, int cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec),
      data_(static_cast<size_t>(rows) * cols, Scalar::zero(spec)) {}

Matrix Matrix::identity(int n, const FieldSpec& spec) {
  Matrix m(n, n, spec);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, spec_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch();
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch();
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, spec_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix apply shape mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(spec_));
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

namespace {

// Fraction-free (Bareiss) forward elimination for rational matrices:
// rows are scaled to coprime integers, the elimination keeps all
// intermediate entries integral, pivots are normalized afterwards.
std::vector<int> rref_rational(Matrix& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j).coeffs()[0];
  // scale each row to integer entries with gcd 1
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) l = lcm(l, a[i][j].get_den());
    mpz_class g = 0;
    for (int j = 0; j < cols; ++j) {
      a[i][j] *= l;
      g = gcd(g, a[i][j].get_num());
    }
    if (g > 1)
      for (int j = 0; j < cols; ++j) a[i][j] /= g;
  }
  std::vector<int> pivots;
  mpq_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    mpq_class piv = a[r][c];
    for (int i = r + 1; i < rows; ++i) {
      mpq_class f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = (piv * a[i][j] - f * a[r][j]) / prev;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  // normalize pivot rows and back-eliminate
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    int pc = pivots[k];
    mpq_class piv = a[k][pc];
    for (int j = pc; j < cols; ++j) a[k][j] /= piv;
    for (int i = 0; i < k; ++i) {
      mpq_class f = a[i][pc];
      if (f == 0) continue;
      for (int j = pc; j < cols; ++j) a[i][j] -= f * a[k][j];
    }
  }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::of_rational(FieldSpec::rational(), a[i][j]);
  return pivots;
}

// Plain exact Gauss-Jordan for cyclotomic fields.
std::vector<int> rref_generic(Matrix& m) {
  int rows = m.rows(), cols = m.cols();
  const FieldSpec& spec = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    (void)spec;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<int> rref(Matrix& m) {
  if (m.field().kind == FieldKind::rational) return rref_rational(m);
  return rref_generic(m);
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
  Matrix e = m;
  std::vector<int> pivots = rref(e);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -e.at(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Matrix& m) {
  Matrix e = m;
  return static_cast<int>(rref(e).size());
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw ShapeMismatch("solve rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
    throw Singular();
  Matrix inv(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace qhr
