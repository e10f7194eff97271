#include "qhr/scalar.hpp"

#include <map>
#include <sstream>

namespace qhr {

namespace {

// Polynomials over Q as coefficient vectors, index = power, no trailing zeros.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division; throws if the division is not exact.
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw Error("non-exact polynomial division");
  return q;
}

// Remainder of a mod b (b nonzero).
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return a;
}

// Extended gcd: returns (g, s) with s*a = g mod m, g the monic gcd of a, m.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly m) {
  Poly r0 = std::move(m), r1 = std::move(a);
  Poly s0 = {}, s1 = {mpq_class(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    Poly r2 = r0;
    Poly q(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 0, mpq_class(0));
    while (r2.size() >= r1.size()) {
      mpq_class c = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
      trim(r2);
    }
    Poly s2 = s0;
    {
      Poly qs = poly_mul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.empty() && r0.back() != 1) {
    mpq_class lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
  }
  return {r0, s0};
}

struct CycloCache {
  int deg;
  Poly phi;                          // Phi_n over Q
  std::vector<Poly> highpow;        // x^{deg+k} mod Phi_n, k = 0..deg-2
};

const CycloCache& cyclo_cache(int n) {
  static std::map<int, CycloCache> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CycloCache c;
  auto phi_z = cyclotomic_polynomial(n);
  c.phi.reserve(phi_z.size());
  for (auto& z : phi_z) c.phi.emplace_back(z);
  c.deg = static_cast<int>(c.phi.size()) - 1;
  for (int k = 0; c.deg >= 1 && k <= c.deg - 2; ++k) {
    Poly x(static_cast<size_t>(c.deg + k) + 1, mpq_class(0));
    x.back() = 1;
    c.highpow.push_back(poly_mod(std::move(x), c.phi));
  }
  return cache.emplace(n, std::move(c)).first->second;
}

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
  // Phi_n = prod_{d|n} (x^{n/d} - 1)^{mu(d)}: multiply numerator factors,
  // then divide by the denominator factors (exact over Z).
  std::vector<mpz_class> num = {1};
  std::vector<std::vector<mpz_class>> dens;
  auto binom = [](int e) {
    std::vector<mpz_class> f(static_cast<size_t>(e) + 1, mpz_class(0));
    f[0] = -1;
    f.back() = 1;
    return f;  // x^e - 1
  };
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(d);
    if (mu == 1) {
      auto f = binom(n / d);
      std::vector<mpz_class> r(num.size() + f.size() - 1, mpz_class(0));
      for (size_t i = 0; i < num.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) r[i + j] += num[i] * f[j];
      num = std::move(r);
    } else if (mu == -1) {
      dens.push_back(binom(n / d));
    }
  }
  for (const auto& den : dens) {
    // exact division of integer polynomials (den is monic up to sign of x^e-1)
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    std::vector<mpz_class> rem = num;
    for (size_t k = rem.size(); k >= den.size(); --k) {
      mpz_class c = rem[k - 1];  // leading coeff of den is 1
      if (c == 0) continue;
      size_t shift = k - den.size();
      q[shift] = c;
      for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    }
    num = std::move(q);
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

int FieldSpec::degree() const {
  return kind == FieldKind::rational ? 1 : euler_phi(order);
}

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::rational) return "rational";
  return "cyclotomic(" + std::to_string(order) + ")";
}

Scalar::Scalar(const FieldSpec& spec, std::vector<mpq_class> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != spec_.degree())
    throw ShapeMismatch("scalar coefficient length does not match field degree");
  for (auto& q : c_) q.canonicalize();
}

Scalar Scalar::zero(const FieldSpec& spec) {
  return Scalar(spec, std::vector<mpq_class>(spec.degree(), mpq_class(0)));
}

Scalar Scalar::one(const FieldSpec& spec) {
  std::vector<mpq_class> c(spec.degree(), mpq_class(0));
  c[0] = 1;
  return Scalar(spec, std::move(c));
}

Scalar Scalar::of_int(const FieldSpec& spec, long v) {
  std::vector<mpq_class> c(spec.degree(), mpq_class(0));
  c[0] = v;
  return Scalar(spec, std::move(c));
}

Scalar Scalar::of_rational(const FieldSpec& spec, const mpq_class& q) {
  std::vector<mpq_class> c(spec.degree(), mpq_class(0));
  c[0] = q;
  return Scalar(spec, std::move(c));
}

Scalar Scalar::zeta(const FieldSpec& spec) {
  if (spec.kind != FieldKind::cyclotomic) throw NotCyclotomic();
  int deg = spec.degree();
  if (deg == 1) {
    // n = 1 or 2: zeta reduces to 1 or -1 mod the linear Phi_n.
    const auto& cc = cyclo_cache(spec.order);
    return Scalar(spec, {-cc.phi[0]});
  }
  std::vector<mpq_class> c(deg, mpq_class(0));
  c[1] = 1;
  return Scalar(spec, std::move(c));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(spec_ == o.spec_)) throw FieldMismatch();
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  std::vector<mpq_class> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Scalar(spec_, std::move(r));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  std::vector<mpq_class> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Scalar(spec_, std::move(r));
}

Scalar Scalar::operator-() const {
  std::vector<mpq_class> r = c_;
  for (auto& q : r) q = -q;
  return Scalar(spec_, std::move(r));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (spec_.kind == FieldKind::rational)
    return Scalar(spec_, {c_[0] * o.c_[0]});
  int deg = spec_.degree();
  std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
  for (int i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  const auto& cc = cyclo_cache(spec_.order);
  std::vector<mpq_class> r(prod.begin(), prod.begin() + deg);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (prod[k] == 0) continue;
    const Poly& red = cc.highpow[k - deg];
    for (size_t i = 0; i < red.size(); ++i) r[i] += prod[k] * red[i];
  }
  return Scalar(spec_, std::move(r));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (spec_.kind == FieldKind::rational)
    return Scalar(spec_, {1 / c_[0]});
  const auto& cc = cyclo_cache(spec_.order);
  Poly a(c_.begin(), c_.end());
  trim(a);
  auto [g, s] = poly_half_ext_gcd(a, cc.phi);
  if (g.size() != 1) throw DivisionByZero();  // Phi_n irreducible: cannot happen
  Poly inv = poly_mod(s, cc.phi);
  std::vector<mpq_class> r(spec_.degree(), mpq_class(0));
  for (size_t i = 0; i < inv.size(); ++i) r[i] = inv[i] / g[0];
  return Scalar(spec_, std::move(r));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  if (o.is_zero()) throw DivisionByZero();
  if (spec_.kind == FieldKind::rational)
    return Scalar(spec_, {c_[0] / o.c_[0]});
  return *this * o.inverse();
}

Scalar Scalar::pow(long k) const {
  Scalar base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  Scalar r = Scalar::one(spec_);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return spec_ == o.spec_ && c_ == o.c_;
}

std::string Scalar::to_string() const {
  if (spec_.kind == FieldKind::rational) return c_[0].get_str();
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

Scalar Scalar::parse(const FieldSpec& spec, const std::string& s) {
  auto parse_q = [](const std::string& t) {
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ParseError("bad rational: '" + t + "'");
    q.canonicalize();
    return q;
  };
  if (spec.kind == FieldKind::rational) {
    return Scalar(spec, {parse_q(s)});
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("bad cyclotomic scalar: '" + s + "'");
  std::vector<mpq_class> c;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_q(item));
  if (static_cast<int>(c.size()) != spec.degree())
    throw ParseError("cyclotomic scalar has wrong length: '" + s + "'");
  return Scalar(spec, std::move(c));
}

}  // namespace qhr
