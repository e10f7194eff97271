#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qhr/error.hpp"

namespace qhr {

enum class FieldKind { rational, cyclotomic };

/// Identifies the coefficient field: the rationals, or the cyclotomic
/// extension Q(zeta_n) realized as Q[x]/(Phi_n).
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  int order = 0;  // n for cyclotomic; 0 for rational

  static FieldSpec rational() { return {FieldKind::rational, 0}; }
  static FieldSpec cyclotomic(int n) { return {FieldKind::cyclotomic, n}; }

  /// Dimension of the field over Q: 1 for rational, phi(n) for cyclotomic.
  int degree() const;

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

/// Coefficients of the n-th cyclotomic polynomial Phi_n, index = power,
/// monic, computed by the Moebius product Phi_n = prod_{d|n} (x^{n/d}-1)^{mu(d)}.
std::vector<mpz_class> cyclotomic_polynomial(int n);

int euler_phi(int n);

/// An exact field element: a rational, or a residue mod Phi_n stored as a
/// coefficient vector of length phi(n). Immutable value type; all arithmetic
/// returns canonical representatives.
class Scalar {
 public:
  Scalar() : spec_(FieldSpec::rational()), c_(1, mpq_class(0)) {}
  Scalar(const FieldSpec& spec, std::vector<mpq_class> coeffs);

  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar of_int(const FieldSpec& spec, long v);
  static Scalar of_rational(const FieldSpec& spec, const mpq_class& q);
  /// The canonical generator zeta_n (reduced mod Phi_n).
  static Scalar zeta(const FieldSpec& spec);

  const FieldSpec& field() const { return spec_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long k) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical string form: rationals as "p" or "p/q"; cyclotomics as
  /// "[c0,c1,...]" with rational entries.
  std::string to_string() const;
  static Scalar parse(const FieldSpec& spec, const std::string& s);

 private:
  FieldSpec spec_;
  std::vector<mpq_class> c_;
  void check_same_field(const Scalar& o) const;
};

}  // namespace qhr
