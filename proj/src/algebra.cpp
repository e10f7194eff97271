#include "qhr/algebra.hpp"

namespace qhr {

namespace {

std::vector<Scalar> mult_vectors(const Algebra& a, const std::vector<Scalar>& u,
                                 const std::vector<Scalar>& v) {
  std::vector<Scalar> r(a.dim, Scalar::zero(a.field));
  for (int i = 0; i < a.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (v[j].is_zero()) continue;
      Scalar f = u[i] * v[j];
      for (const auto& [k, c] : a.mult_row(i, j)) r[k] += f * c;
    }
  }
  return r;
}

}  // namespace

std::string Algebra::associativity_witness() const {
  // (e_i e_j) e_k vs e_i (e_j e_k), with preallocated accumulators
  Scalar z = Scalar::zero(field);
  std::vector<Scalar> lhs(dim, z), rhs(dim, z);
  std::vector<int> touched;
  touched.reserve(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const auto& ij = mult_row(i, j);
      for (int k = 0; k < dim; ++k) {
        touched.clear();
        for (const auto& [p, c] : ij)
          for (const auto& [q, d] : mult_row(p, k)) {
            if (lhs[q].is_zero() && rhs[q].is_zero()) touched.push_back(q);
            lhs[q] += c * d;
          }
        for (const auto& [p, c] : mult_row(j, k))
          for (const auto& [q, d] : mult_row(i, p)) {
            if (lhs[q].is_zero() && rhs[q].is_zero()) touched.push_back(q);
            rhs[q] += c * d;
          }
        bool ok = true;
        for (int q : touched)
          if (lhs[q] != rhs[q]) { ok = false; break; }
        for (int q : touched) {
          lhs[q] = z;
          rhs[q] = z;
        }
        if (!ok)
          return "associativity fails at basis triple (" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + ")";
      }
    }
  return {};
}

std::string Algebra::unit_witness() const {
  for (int i = 0; i < dim; ++i) {
    std::vector<Scalar> e(dim, Scalar::zero(field));
    e[i] = Scalar::one(field);
    if (mult_vectors(*this, unit, e) != e)
      return "left unit law fails at basis " + std::to_string(i);
    if (mult_vectors(*this, e, unit) != e)
      return "right unit law fails at basis " + std::to_string(i);
  }
  return {};
}

Matrix Algebra::left_mult_matrix(const std::vector<Scalar>& v) const {
  Matrix m(dim, dim, field);
  for (int i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j)
      for (const auto& [k, c] : mult_row(i, j)) m.at(k, j) += v[i] * c;
  }
  return m;
}

Matrix Algebra::right_mult_matrix(const std::vector<Scalar>& v) const {
  Matrix m(dim, dim, field);
  for (int j = 0; j < dim; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < dim; ++i)
      for (const auto& [k, c] : mult_row(i, j)) m.at(k, i) += v[j] * c;
  }
  return m;
}

Element::Element(AlgebraPtr a, std::vector<Scalar> coeffs) : alg(std::move(a)), c(std::move(coeffs)) {
  if (static_cast<int>(c.size()) != alg->dim)
    throw ShapeMismatch("element coefficient length does not match algebra dimension");
}

Element Element::zero(AlgebraPtr a) {
  int d = a->dim;
  FieldSpec f = a->field;
  return Element(std::move(a), std::vector<Scalar>(d, Scalar::zero(f)));
}

Element Element::unit(AlgebraPtr a) {
  auto u = a->unit;
  return Element(std::move(a), u);
}

Element Element::basis(AlgebraPtr a, int i) {
  Element e = zero(std::move(a));
  e.c[i] = Scalar::one(e.alg->field);
  return e;
}

bool Element::is_zero() const {
  for (const auto& s : c)
    if (!s.is_zero()) return false;
  return true;
}

Element Element::operator+(const Element& o) const {
  if (alg != o.alg) throw FactorMismatch("element sum across different algebras");
  Element r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Element Element::operator-(const Element& o) const {
  if (alg != o.alg) throw FactorMismatch("element difference across different algebras");
  Element r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Element Element::operator*(const Element& o) const {
  if (alg != o.alg) throw FactorMismatch("element product across different algebras");
  return Element(alg, mult_vectors(*alg, c, o.c));
}

Element Element::scaled(const Scalar& s) const {
  Element r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool Element::operator==(const Element& o) const { return alg == o.alg && c == o.c; }

TensorElement::TensorElement(std::vector<AlgebraPtr> fs, std::vector<Scalar> coeffs)
    : factors(std::move(fs)), c(std::move(coeffs)) {
  size_t n = 1;
  for (const auto& f : factors) {
    n *= f->dim;
    if (!(f->field == factors[0]->field))
      throw FactorMismatch("tensor factors over different fields");
  }
  if (c.size() != n) throw ShapeMismatch("tensor coefficient length mismatch");
}

TensorElement TensorElement::zero(std::vector<AlgebraPtr> fs) {
  size_t n = 1;
  for (const auto& f : fs) n *= f->dim;
  FieldSpec spec = fs.at(0)->field;
  return TensorElement(std::move(fs), std::vector<Scalar>(n, Scalar::zero(spec)));
}

TensorElement TensorElement::unit(std::vector<AlgebraPtr> fs) {
  TensorElement t = zero(fs);
  // product of the factor units
  std::vector<int> idx(fs.size(), 0);
  size_t total = t.c.size();
  for (size_t flat = 0; flat < total; ++flat) {
    std::vector<int> ix = t.unflat(flat);
    Scalar v = Scalar::one(t.field());
    bool nz = true;
    for (size_t l = 0; l < fs.size(); ++l) {
      const Scalar& u = fs[l]->unit[ix[l]];
      if (u.is_zero()) { nz = false; break; }
      v *= u;
    }
    if (nz) t.c[flat] = v;
  }
  return t;
}

size_t TensorElement::flat(const std::vector<int>& idx) const {
  size_t f = 0;
  for (size_t l = 0; l < factors.size(); ++l) f = f * factors[l]->dim + idx[l];
  return f;
}

std::vector<int> TensorElement::unflat(size_t flat_idx) const {
  std::vector<int> idx(factors.size());
  for (size_t l = factors.size(); l-- > 0;) {
    idx[l] = static_cast<int>(flat_idx % factors[l]->dim);
    flat_idx /= factors[l]->dim;
  }
  return idx;
}

bool TensorElement::is_zero() const {
  for (const auto& s : c)
    if (!s.is_zero()) return false;
  return true;
}

bool TensorElement::same_factors(const TensorElement& o) const {
  return factors == o.factors;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (!same_factors(o)) throw FactorMismatch();
  TensorElement r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  if (!same_factors(o)) throw FactorMismatch();
  TensorElement r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

TensorElement TensorElement::scaled(const Scalar& s) const {
  TensorElement r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return factors == o.factors && c == o.c;
}

TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t) {
  if (!s.same_factors(t)) throw FactorMismatch("tensor product factor lists differ");
  size_t nf = s.factors.size();
  TensorElement r = TensorElement::zero(s.factors);
  std::vector<size_t> snz, tnz;
  for (size_t i = 0; i < s.c.size(); ++i)
    if (!s.c[i].is_zero()) snz.push_back(i);
  for (size_t i = 0; i < t.c.size(); ++i)
    if (!t.c[i].is_zero()) tnz.push_back(i);
  std::vector<int> si, ti;
  for (size_t p : snz) {
    si = s.unflat(p);
    for (size_t q : tnz) {
      ti = t.unflat(q);
      Scalar base = s.c[p] * t.c[q];
      // expand the factorwise products e_{si[l]} e_{ti[l]} with an odometer
      // over the sparse multiplication rows
      std::vector<const std::vector<std::pair<int, Scalar>>*> rows(nf);
      bool empty = false;
      for (size_t l = 0; l < nf; ++l) {
        rows[l] = &s.factors[l]->mult_row(si[l], ti[l]);
        if (rows[l]->empty()) { empty = true; break; }
      }
      if (empty) continue;
      std::vector<size_t> pos(nf, 0);
      while (true) {
        Scalar v = base;
        size_t flat = 0;
        for (size_t l = 0; l < nf; ++l) {
          const auto& [k, cc] = (*rows[l])[pos[l]];
          v *= cc;
          flat = flat * s.factors[l]->dim + k;
        }
        r.c[flat] += v;
        size_t l = nf;
        while (l-- > 0) {
          if (++pos[l] < rows[l]->size()) break;
          pos[l] = 0;
          if (l == 0) goto next_pair;
        }
      }
    next_pair:;
    }
  }
  return r;
}

TensorElement tensor_embed(const TensorElement& e, const std::vector<int>& legs,
                           const std::vector<AlgebraPtr>& ambient) {
  if (legs.size() != e.factors.size()) throw LegMismatch("leg count mismatch");
  std::vector<bool> used(ambient.size(), false);
  for (size_t l = 0; l < legs.size(); ++l) {
    int leg = legs[l];
    if (leg < 0 || leg >= static_cast<int>(ambient.size()) || used[leg])
      throw LegMismatch("leg index out of range or repeated");
    if (ambient[leg] != e.factors[l]) throw LegMismatch("factor algebra mismatch on leg");
    used[leg] = true;
  }
  TensorElement r = TensorElement::zero(ambient);
  // precompute unit nonzeros of the unused legs
  std::vector<std::vector<std::pair<int, Scalar>>> unit_nz(ambient.size());
  for (size_t a = 0; a < ambient.size(); ++a) {
    if (used[a]) continue;
    for (int i = 0; i < ambient[a]->dim; ++i)
      if (!ambient[a]->unit[i].is_zero()) unit_nz[a].push_back({i, ambient[a]->unit[i]});
  }
  for (size_t p = 0; p < e.c.size(); ++p) {
    if (e.c[p].is_zero()) continue;
    std::vector<int> src = e.unflat(p);
    std::vector<int> amb(ambient.size(), -1);
    for (size_t l = 0; l < legs.size(); ++l) amb[legs[l]] = src[l];
    // odometer over unit nonzeros of unused legs
    std::vector<size_t> unused_legs;
    for (size_t a = 0; a < ambient.size(); ++a)
      if (!used[a]) unused_legs.push_back(a);
    std::vector<size_t> pos(unused_legs.size(), 0);
    while (true) {
      Scalar v = e.c[p];
      for (size_t u = 0; u < unused_legs.size(); ++u) {
        const auto& [i, s] = unit_nz[unused_legs[u]][pos[u]];
        amb[unused_legs[u]] = i;
        v *= s;
      }
      r.c[r.flat(amb)] += v;
      if (unused_legs.empty()) break;
      size_t u = unused_legs.size();
      bool done = false;
      while (u-- > 0) {
        if (++pos[u] < unit_nz[unused_legs[u]].size()) break;
        pos[u] = 0;
        if (u == 0) done = true;
      }
      if (done) break;
    }
  }
  return r;
}

TensorElement tensor_embed(const Element& e, int leg, const std::vector<AlgebraPtr>& ambient) {
  TensorElement t({e.alg}, e.c);
  return tensor_embed(t, {leg}, ambient);
}

TensorElement tensor_of(const std::vector<Element>& parts) {
  std::vector<AlgebraPtr> fs;
  for (const auto& p : parts) fs.push_back(p.alg);
  TensorElement r = TensorElement::zero(fs);
  size_t total = r.c.size();
  for (size_t flat = 0; flat < total; ++flat) {
    std::vector<int> ix = r.unflat(flat);
    Scalar v = Scalar::one(r.field());
    bool nz = true;
    for (size_t l = 0; l < parts.size(); ++l) {
      if (parts[l].c[ix[l]].is_zero()) { nz = false; break; }
      v *= parts[l].c[ix[l]];
    }
    if (nz) r.c[flat] = v;
  }
  return r;
}

TensorElement apply_on_leg(const TensorElement& t, const Matrix& m, int leg,
                           const AlgebraPtr& target) {
  if (m.cols() != t.factors[leg]->dim || m.rows() != target->dim)
    throw ShapeMismatch("apply_on_leg shape mismatch");
  std::vector<AlgebraPtr> fs = t.factors;
  fs[leg] = target;
  TensorElement r = TensorElement::zero(fs);
  for (size_t p = 0; p < t.c.size(); ++p) {
    if (t.c[p].is_zero()) continue;
    std::vector<int> ix = t.unflat(p);
    int src = ix[leg];
    for (int i = 0; i < m.rows(); ++i) {
      const Scalar& a = m.at(i, src);
      if (a.is_zero()) continue;
      ix[leg] = i;
      r.c[r.flat(ix)] += t.c[p] * a;
    }
  }
  return r;
}

}  // namespace qhr
