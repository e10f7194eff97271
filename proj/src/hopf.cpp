#include "qhr/hopf.hpp"

namespace qhr {

HopfPtr finalize_hopf(HopfAlgebra h) {
  try {
    h.antipode_inv = inverse(h.antipode);
  } catch (const Singular&) {
    throw AxiomFailure("antipode of '" + h.name + "' is not invertible");
  }
  return std::make_shared<const HopfAlgebra>(std::move(h));
}

Element antipode(const HopfPtr& a, const Element& e) {
  return Element(a, a->antipode.apply(e.c));
}

Element antipode_inverse(const HopfPtr& a, const Element& e) {
  return Element(a, a->antipode_inv.apply(e.c));
}

Scalar counit_of(const HopfPtr& a, const Element& e) {
  Scalar s = Scalar::zero(a->field);
  for (int i = 0; i < a->dim; ++i)
    if (!e.c[i].is_zero()) s += a->counit[i] * e.c[i];
  return s;
}

Scalar pair_vectors(const Matrix& p, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  Scalar s = Scalar::zero(p.field());
  for (int i = 0; i < p.rows(); ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < p.cols(); ++j) {
      if (v[j].is_zero() || p.at(i, j).is_zero()) continue;
      s += u[i] * p.at(i, j) * v[j];
    }
  }
  return s;
}

TensorElement coproduct(const HopfPtr& a, const Element& e) {
  TensorElement t = TensorElement::zero({a, a});
  for (int i = 0; i < a->dim; ++i) {
    if (e.c[i].is_zero()) continue;
    for (const auto& [j, k, c] : a->comult_row(i))
      t.c[static_cast<size_t>(j) * a->dim + k] += e.c[i] * c;
  }
  return t;
}

TensorElement iterated_coproduct(const HopfPtr& a, const Element& e, int k) {
  if (k < 1) throw Error("iterated_coproduct: k must be >= 1");
  TensorElement t({a}, e.c);
  for (int step = 1; step < k; ++step) {
    std::vector<AlgebraPtr> fs(t.factors.size() + 1, a);
    TensorElement next = TensorElement::zero(fs);
    for (size_t p = 0; p < t.c.size(); ++p) {
      if (t.c[p].is_zero()) continue;
      std::vector<int> ix = t.unflat(p);
      std::vector<int> out(ix.size() + 1);
      std::copy(ix.begin() + 1, ix.end(), out.begin() + 2);
      for (const auto& [j, kk, c] : a->comult_row(ix[0])) {
        out[0] = j;
        out[1] = kk;
        next.c[next.flat(out)] += t.c[p] * c;
      }
    }
    t = std::move(next);
  }
  return t;
}

namespace {

std::string idx2(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

AxiomReport verify_hopf(const HopfPtr& a) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const FieldSpec& F = a->field;
  int n = a->dim;

  add("associativity", a->associativity_witness());
  add("unit", a->unit_witness());

  // coassociativity
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i) {
      TensorElement d2l = iterated_coproduct(a, Element::basis(a, i), 3);
      // rightmost-first association: (id (x) Delta) Delta
      TensorElement d = coproduct(a, Element::basis(a, i));
      TensorElement d2r = TensorElement::zero({a, a, a});
      for (size_t p = 0; p < d.c.size(); ++p) {
        if (d.c[p].is_zero()) continue;
        auto ix = d.unflat(p);
        for (const auto& [j, k, c] : a->comult_row(ix[1])) {
          d2r.c[(static_cast<size_t>(ix[0]) * n + j) * n + k] += d.c[p] * c;
        }
      }
      if (!(d2l == d2r)) w = "coassociativity fails at basis " + std::to_string(i);
    }
    add("coassociativity", w);
  }

  // counit law
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i) {
      TensorElement d = coproduct(a, Element::basis(a, i));
      std::vector<Scalar> left(n, Scalar::zero(F)), right(n, Scalar::zero(F));
      for (size_t p = 0; p < d.c.size(); ++p) {
        if (d.c[p].is_zero()) continue;
        auto ix = d.unflat(p);
        left[ix[1]] += a->counit[ix[0]] * d.c[p];
        right[ix[0]] += a->counit[ix[1]] * d.c[p];
      }
      std::vector<Scalar> e(n, Scalar::zero(F));
      e[i] = Scalar::one(F);
      if (left != e || right != e) w = "counit law fails at basis " + std::to_string(i);
    }
    add("counit", w);
  }

  // Delta is an algebra map
  {
    std::string w;
    {
      TensorElement du = coproduct(a, Element::unit(a));
      if (!(du == TensorElement::unit({a, a}))) w = "Delta(1) != 1(x)1";
    }
    for (int i = 0; i < n && w.empty(); ++i) {
      TensorElement di = coproduct(a, Element::basis(a, i));
      for (int j = 0; j < n && w.empty(); ++j) {
        TensorElement dj = coproduct(a, Element::basis(a, j));
        TensorElement lhs = tensor_multiply(di, dj);
        TensorElement rhs = coproduct(a, Element::basis(a, i) * Element::basis(a, j));
        if (!(lhs == rhs)) w = "Delta not multiplicative at basis pair " + idx2(i, j);
      }
    }
    add("comult_algebra_map", w);
  }

  // epsilon is an algebra map
  {
    std::string w;
    if (!counit_of(a, Element::unit(a)).is_one()) w = "epsilon(1) != 1";
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        Scalar lhs = counit_of(a, Element::basis(a, i) * Element::basis(a, j));
        Scalar rhs = a->counit[i] * a->counit[j];
        if (lhs != rhs) w = "epsilon not multiplicative at basis pair " + idx2(i, j);
      }
    add("counit_algebra_map", w);
  }

  // antipode axiom m(S (x) id)Delta = eta eps = m(id (x) S)Delta
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i) {
      Element bi = Element::basis(a, i);
      TensorElement d = coproduct(a, bi);
      Element left = Element::zero(a), right = Element::zero(a);
      for (size_t p = 0; p < d.c.size(); ++p) {
        if (d.c[p].is_zero()) continue;
        auto ix = d.unflat(p);
        Element s1 = antipode(a, Element::basis(a, ix[0]));
        left = left + (s1 * Element::basis(a, ix[1])).scaled(d.c[p]);
        Element s2 = antipode(a, Element::basis(a, ix[1]));
        right = right + (Element::basis(a, ix[0]) * s2).scaled(d.c[p]);
      }
      Element target = Element::unit(a).scaled(a->counit[i]);
      if (!(left == target) || !(right == target))
        w = "antipode axiom fails at basis " + std::to_string(i);
    }
    add("antipode", w);
  }

  // cached antipode inverse
  {
    std::string w;
    if (a->antipode_inv.rows() != n || !(a->antipode * a->antipode_inv).is_identity())
      w = "cached antipode inverse is not a two-sided inverse";
    add("antipode_invertible", w);
  }

  return rep;
}

HopfPtr twist(const HopfPtr& a, Twist which) {
  HopfAlgebra t = *a;
  t.name = a->name + (which == Twist::op ? "^op" : "^cop");
  if (which == Twist::op) {
    for (int i = 0; i < a->dim; ++i)
      for (int j = 0; j < a->dim; ++j) t.set_mult(i, j, a->mult_row(j, i));
  } else {
    for (int i = 0; i < a->dim; ++i) {
      std::vector<std::tuple<int, int, Scalar>> row;
      for (const auto& [j, k, c] : a->comult_row(i)) row.emplace_back(k, j, c);
      t.comult[i] = std::move(row);
    }
  }
  std::swap(t.antipode, t.antipode_inv);
  return std::make_shared<const HopfAlgebra>(std::move(t));
}

std::pair<HopfPtr, HopfPairing> dual(const HopfPtr& a) {
  int n = a->dim;
  HopfAlgebra d;
  d.name = a->name + "^*";
  d.field = a->field;
  d.dim = n;
  for (const auto& b : a->basis) d.basis.push_back(b + "^");
  d.mult.assign(static_cast<size_t>(n) * n, {});
  // f_j f_k = sum_i Delta_i^{jk} f_i
  for (int i = 0; i < n; ++i)
    for (const auto& [j, k, c] : a->comult_row(i))
      d.mult[static_cast<size_t>(j) * n + k].push_back({i, c});
  d.unit = a->counit;
  // Delta*(f_k) = sum_{ij} m_{ij}^k f_i (x) f_j
  d.comult.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a->mult_row(i, j)) d.comult[k].emplace_back(i, j, c);
  d.counit = a->unit;
  d.antipode = a->antipode.transpose();
  HopfPtr dp = finalize_hopf(std::move(d));
  HopfPairing p{a, dp, Matrix::identity(n, a->field)};
  return {dp, p};
}

AxiomReport verify_pairing(const HopfPairing& p) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const HopfPtr& A = p.left;
  const HopfPtr& B = p.right;
  const Matrix& P = p.matrix;
  int n = A->dim, m = B->dim;
  if (P.rows() != n || P.cols() != m) throw ShapeMismatch("pairing matrix shape");
  const FieldSpec& F = A->field;

  // (1) <ab, x> = <a (x) b, Delta(x)>
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        for (int x = 0; x < m && w.empty(); ++x) {
          Scalar lhs = Scalar::zero(F);
          for (const auto& [k, c] : A->mult_row(i, j)) lhs += c * P.at(k, x);
          Scalar rhs = Scalar::zero(F);
          for (const auto& [q, r, c] : B->comult_row(x)) rhs += c * P.at(i, q) * P.at(j, r);
          if (lhs != rhs)
            w = "axiom1 fails at (a,b,x) = (" + std::to_string(i) + "," + std::to_string(j) +
                "," + std::to_string(x) + ")";
        }
    add("pairing_mult_left", w);
  }

  // (2) <a, xy> = <Delta(a), x (x) y>
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int x = 0; x < m && w.empty(); ++x)
        for (int y = 0; y < m && w.empty(); ++y) {
          Scalar lhs = Scalar::zero(F);
          for (const auto& [k, c] : B->mult_row(x, y)) lhs += c * P.at(i, k);
          Scalar rhs = Scalar::zero(F);
          for (const auto& [q, r, c] : A->comult_row(i)) rhs += c * P.at(q, x) * P.at(r, y);
          if (lhs != rhs)
            w = "axiom2 fails at (a,x,y) = (" + std::to_string(i) + "," + std::to_string(x) +
                "," + std::to_string(y) + ")";
        }
    add("pairing_mult_right", w);
  }

  // (3) <1_A, -> = eps_{A*} and <-, 1_{A*}> = eps_A
  {
    std::string w;
    for (int x = 0; x < m && w.empty(); ++x) {
      Scalar lhs = Scalar::zero(F);
      for (int i = 0; i < n; ++i)
        if (!A->unit[i].is_zero()) lhs += A->unit[i] * P.at(i, x);
      if (lhs != B->counit[x]) w = "axiom3 fails on <1_A, f_" + std::to_string(x) + ">";
    }
    for (int i = 0; i < n && w.empty(); ++i) {
      Scalar lhs = Scalar::zero(F);
      for (int x = 0; x < m; ++x)
        if (!B->unit[x].is_zero()) lhs += P.at(i, x) * B->unit[x];
      if (lhs != A->counit[i]) w = "axiom3 fails on <e_" + std::to_string(i) + ", 1_{A*}>";
    }
    add("pairing_units", w);
  }

  // (4) <S(a), x> = <a, S(x)>
  {
    std::string w;
    Matrix lhs = A->antipode.transpose() * P;
    Matrix rhs = P * B->antipode;
    if (!(lhs == rhs)) w = "axiom4 (antipode compatibility) fails";
    add("pairing_antipode", w);
  }

  add("pairing_nondegenerate", rank(P) == std::min(n, m) && n == m
                                   ? std::string{}
                                   : "pairing matrix is singular");
  return rep;
}

}  // namespace qhr
