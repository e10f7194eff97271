#include "qhr/doubles.hpp"

namespace qhr {

namespace {

struct Term3 {
  int a, b, c;
  Scalar coef;
};

// All 3-fold coproduct terms of every basis element.
std::vector<std::vector<Term3>> coproduct3_table(const HopfPtr& h) {
  std::vector<std::vector<Term3>> t(h->dim);
  for (int i = 0; i < h->dim; ++i) {
    TensorElement d = iterated_coproduct(h, Element::basis(h, i), 3);
    for (size_t p = 0; p < d.c.size(); ++p) {
      if (d.c[p].is_zero()) continue;
      auto ix = d.unflat(p);
      t[i].push_back({ix[0], ix[1], ix[2], d.c[p]});
    }
  }
  return t;
}

std::vector<std::pair<int, Scalar>> sparsify(const std::vector<Scalar>& v) {
  std::vector<std::pair<int, Scalar>> r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.push_back({static_cast<int>(i), v[i]});
  return r;
}

Matrix flatten_endo(const Matrix& e) {
  // n x n endomorphism as a column of length n^2, row-major
  int n = e.rows();
  Matrix col(n * n, 1, e.field());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) col.at(r * n + c, 0) = e.at(r, c);
  return col;
}

// matrix of b |-> b <- y for a fixed y in A* (right coregular action of A*
// on A through the pairing): b <- y = <b_1, y> b_2
Matrix right_coregular_on_base(const HopfPtr& a, const Matrix& pairing,
                               const std::vector<Scalar>& y) {
  int n = a->dim;
  Matrix m(n, n, a->field);
  for (int b = 0; b < n; ++b)
    for (const auto& [b1, b2, c] : a->comult_row(b)) {
      Scalar pv = Scalar::zero(a->field);
      for (int q = 0; q < n; ++q)
        if (!y[q].is_zero() && !pairing.at(b1, q).is_zero()) pv += pairing.at(b1, q) * y[q];
      if (!pv.is_zero()) m.at(b2, b) += c * pv;
    }
  return m;
}

// The antipode matrix of T(A) (resp. the iota automorphism of H(B)):
// a (x) x |-> a_r S^{-1}(a) S^{-1}(a_t) (x) x^t S(x) x^r with implicit sums
// over the dual bases (a_r, x^r), (a_t, x^t).
Matrix iota_matrix(const SmashAlgebra& h, const HopfPtr& b, const HopfPtr& bdual) {
  int n = b->dim;
  Matrix m(n * n, n * n, b->field);
  // cache S^{-1}(e_a) and S(f_x)
  std::vector<Element> sinv_a, s_x;
  for (int i = 0; i < n; ++i) {
    sinv_a.push_back(antipode_inverse(b, Element::basis(b, i)));
    s_x.push_back(antipode(bdual, Element::basis(bdual, i)));
  }
  std::vector<Element> sinv_basis;  // S^{-1}(a_t)
  for (int t = 0; t < n; ++t) sinv_basis.push_back(sinv_a[t]);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      std::vector<Scalar> out(static_cast<size_t>(n) * n, Scalar::zero(b->field));
      for (int r = 0; r < n; ++r) {
        for (int t = 0; t < n; ++t) {
          Element left = Element::basis(b, r) * sinv_a[a] * sinv_basis[t];
          if (left.is_zero()) continue;
          Element right = Element::basis(bdual, t) * s_x[x] * Element::basis(bdual, r);
          if (right.is_zero()) continue;
          for (int p = 0; p < n; ++p) {
            if (left.c[p].is_zero()) continue;
            for (int q = 0; q < n; ++q)
              if (!right.c[q].is_zero())
                out[static_cast<size_t>(p) * n + q] += left.c[p] * right.c[q];
          }
        }
      }
      for (int k = 0; k < n * n; ++k) m.at(k, a * n + x) = out[k];
    }
  return m;
}

}  // namespace

Element DoublePackage::embed_base(const Element& a) const {
  return Element(drinfeld, embed_a.apply(a.c));
}

Element DoublePackage::embed_base_dual(const Element& x) const {
  return Element(drinfeld, embed_x.apply(x.c));
}

TensorElement drinfeld_coproduct(const DoublePackage& d, const Element& e) {
  return coproduct(d.drinfeld, e);
}

namespace {

HopfPtr build_drinfeld(const HopfPtr& A, const HopfPtr& X, const HopfPairing& P) {
  int n = A->dim;
  int dim = n * n;
  const FieldSpec& F = A->field;
  HopfAlgebra d;
  d.name = "D(" + A->name + ")";
  d.field = F;
  d.dim = dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.basis.push_back(X->basis[i] + "(x)" + A->basis[j]);
  d.unit.assign(dim, Scalar::zero(F));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!X->unit[i].is_zero() && !A->unit[j].is_zero())
        d.unit[static_cast<size_t>(i) * n + j] = X->unit[i] * A->unit[j];
  d.counit.assign(dim, Scalar::zero(F));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.counit[static_cast<size_t>(i) * n + j] = X->counit[i] * A->counit[j];

  // multiplication: (x (x) a)(y (x) b) = <a_1, y_3><a_3, S^{-1}y_1> x y_2 (x) a_2 b
  auto d3a = coproduct3_table(A);
  auto d3x = coproduct3_table(X);
  d.mult.assign(static_cast<size_t>(dim) * dim, {});
  std::vector<Scalar> out(dim, Scalar::zero(F));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      size_t li = static_cast<size_t>(i) * n + j;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          size_t rj = static_cast<size_t>(k) * n + l;
          std::fill(out.begin(), out.end(), Scalar::zero(F));
          for (const auto& ta : d3a[j]) {
            for (const auto& ty : d3x[k]) {
              // <a_1, y_3>
              const Scalar& p1 = P.matrix.at(ta.a, ty.c);
              if (p1.is_zero()) continue;
              // <a_3, S^{-1} y_1>
              Scalar p2 = Scalar::zero(F);
              for (int m = 0; m < n; ++m) {
                const Scalar& sv = X->antipode_inv.at(m, ty.a);
                if (!sv.is_zero() && !P.matrix.at(ta.c, m).is_zero())
                  p2 += P.matrix.at(ta.c, m) * sv;
              }
              if (p2.is_zero()) continue;
              Scalar s = ta.coef * ty.coef * p1 * p2;
              for (const auto& [xm, cx] : X->mult_row(i, ty.b))
                for (const auto& [am, ca] : A->mult_row(ta.b, l))
                  out[static_cast<size_t>(xm) * n + am] += s * cx * ca;
            }
          }
          d.mult[li * dim + rj] = sparsify(out);
        }
    }

  // coalgebra: (A*)^{cop} (x) A
  d.comult.assign(dim, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& row = d.comult[static_cast<size_t>(i) * n + j];
      for (const auto& [p, q, cx] : X->comult_row(i))
        for (const auto& [r, s, ca] : A->comult_row(j))
          row.emplace_back(q * n + r, p * n + s, cx * ca);
    }

  // antipode on generators, extended anti-multiplicatively through the
  // factorization x (x) a = (x (x) 1)(1 (x) a):
  //   S_D(x (x) a) = S_D(1 (x) a) S_D(x (x) 1)
  auto dalg = std::make_shared<const Algebra>(static_cast<const Algebra&>(d));
  auto embed = [&](const std::vector<Scalar>& xv, const std::vector<Scalar>& av) {
    Element e = Element::zero(dalg);
    for (int p = 0; p < n; ++p) {
      if (xv[p].is_zero()) continue;
      for (int q = 0; q < n; ++q)
        if (!av[q].is_zero()) e.c[static_cast<size_t>(p) * n + q] += xv[p] * av[q];
    }
    return e;
  };
  d.antipode = Matrix(dim, dim, F);
  for (int i = 0; i < n; ++i) {
    // Sbar = antipode of (A*)^{cop} = S_{A*}^{-1}
    std::vector<Scalar> sx(n, Scalar::zero(F));
    for (int m = 0; m < n; ++m) sx[m] = X->antipode_inv.at(m, i);
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> sa(n, Scalar::zero(F));
      for (int m = 0; m < n; ++m) sa[m] = A->antipode.at(m, j);
      Element v = embed(X->unit, sa) * embed(sx, A->unit);
      for (int k = 0; k < dim; ++k) d.antipode.at(k, static_cast<size_t>(i) * n + j) = v.c[k];
    }
  }
  HopfPtr dp = finalize_hopf(std::move(d));
  AxiomReport rep = verify_hopf(dp);
  if (!rep.ok())
    throw AxiomFailure("Drinfeld double of '" + A->name + "': " + rep.first_failure());
  return dp;
}

TensorElement canonical_r(const DoublePackage& pkg) {
  int n = pkg.n();
  const HopfPtr& D = pkg.drinfeld;
  TensorElement r = TensorElement::zero({D, D});
  for (int i = 0; i < n; ++i) {
    Element leg1 = Element(D, pkg.embed_a.apply(Element::basis(pkg.base, i).c));
    Element leg2 = Element(D, pkg.embed_x.apply(Element::basis(pkg.base_dual, i).c));
    for (int p = 0; p < D->dim; ++p) {
      if (leg1.c[p].is_zero()) continue;
      for (int q = 0; q < D->dim; ++q)
        if (!leg2.c[q].is_zero())
          r.c[static_cast<size_t>(p) * D->dim + q] += leg1.c[p] * leg2.c[q];
    }
  }
  return r;
}

}  // namespace

DoublePackage build_double_package(const HopfPtr& a, int stage) {
  DoublePackage pkg;
  pkg.base = a;
  auto [xd, pair] = dual(a);
  pkg.base_dual = xd;
  pkg.pairing = pair;
  int n = a->dim;
  const FieldSpec& F = a->field;

  // stage 1: Heisenberg double H(A) = A # A*, rho_L, rho_R, iota
  {
    ModuleAlgebraAction act = dual_left_coregular(pkg.pairing);
    pkg.heis = smash_product(a, xd, act, "H(" + a->name + ")");
    pkg.rho_l = Matrix(n * n, n * n, F);
    pkg.rho_r = Matrix(n * n, n * n, F);
    for (int ai = 0; ai < n; ++ai) {
      Matrix lm = a->left_mult_matrix(Element::basis(a, ai).c);
      Element sia = antipode_inverse(a, Element::basis(a, ai));
      Matrix rm = a->right_mult_matrix(sia.c);
      for (int x = 0; x < n; ++x) {
        Matrix actx = act.actor_matrix(x);
        Matrix el = lm * actx;
        Matrix colL = flatten_endo(el);
        // rho_R(a#x): b |-> <x, S b_1> b_2 S^{-1}(a)
        std::vector<Scalar> sx(n, Scalar::zero(F));
        for (int m = 0; m < n; ++m) sx[m] = xd->antipode.at(m, x);
        Matrix er = rm * right_coregular_on_base(a, pkg.pairing.matrix, sx);
        Matrix colR = flatten_endo(er);
        for (int k = 0; k < n * n; ++k) {
          pkg.rho_l.at(k, static_cast<size_t>(ai) * n + x) = colL.at(k, 0);
          pkg.rho_r.at(k, static_cast<size_t>(ai) * n + x) = colR.at(k, 0);
        }
      }
    }
    if (rank(pkg.rho_l) != n * n)
      throw AxiomFailure("rho_L of H(" + a->name + ") is not bijective");
    pkg.iota = iota_matrix(*pkg.heis, a, xd);
    if (rank(pkg.iota) != n * n)
      throw AxiomFailure("iota of H(" + a->name + ") is not bijective");
  }
  if (stage < 2) return pkg;

  // stage 2: D(A), R, u
  pkg.drinfeld = build_drinfeld(a, xd, pkg.pairing);
  pkg.embed_a = Matrix(n * n, n, F);
  pkg.embed_x = Matrix(n * n, n, F);
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < n; ++p) {
      if (!xd->unit[p].is_zero()) pkg.embed_a.at(p * n + j, j) = xd->unit[p];
      if (!a->unit[p].is_zero()) pkg.embed_x.at(j * n + p, j) = a->unit[p];
    }
  pkg.R = canonical_r(pkg);
  {
    // u = S(a_i) S(x^i) with the antipodes of A and A* applied before
    // embedding into D
    const HopfPtr& D = pkg.drinfeld;
    Element u = Element::zero(D);
    for (int i = 0; i < n; ++i) {
      Element sa = Element(D, pkg.embed_a.apply(antipode(a, Element::basis(a, i)).c));
      Element sx = Element(D, pkg.embed_x.apply(antipode(xd, Element::basis(xd, i)).c));
      u = u + sa * sx;
    }
    pkg.u = u;
    auto inv = solve(D->left_mult_matrix(u.c), Element::unit(D).c);
    if (!inv) throw AxiomFailure("u element of D(" + a->name + ") is not invertible");
    pkg.u_inv = Element(D, *inv);
    if (!(pkg.u * pkg.u_inv == Element::unit(D)) || !(pkg.u_inv * pkg.u == Element::unit(D)))
      throw AxiomFailure("u inverse of D(" + a->name + ") is one-sided");
  }
  if (stage < 3) return pkg;

  // stage 3: T(A) = D(A)^*, with the explicit-formula agreement enforced
  {
    auto [t, tp] = dual(pkg.drinfeld);
    HopfAlgebra tt = *t;
    tt.name = "T(" + a->name + ")";
    pkg.tdual = finalize_hopf(std::move(tt));
    AxiomReport rep = check_tdual(pkg);
    if (!rep.ok())
      throw FormulaMismatch("T(" + a->name + ") explicit formulas disagree with dual(D): " +
                            rep.first_failure());
  }
  if (stage < 4) return pkg;

  // stage 4: H(T^op), iota_big, moment maps, D(A)-action on A
  {
    pkg.tdual_op = twist(pkg.tdual, Twist::op);
    pkg.drinfeld_cop = twist(pkg.drinfeld, Twist::cop);
    HopfPairing bigP{pkg.tdual_op, pkg.drinfeld_cop, Matrix::identity(n * n, F)};
    ModuleAlgebraAction bigact = dual_left_coregular(bigP);
    pkg.big_heis = smash_product(pkg.tdual_op, pkg.drinfeld_cop, bigact,
                                 "H(T(" + a->name + ")^op)");
    pkg.iota_big = iota_matrix(*pkg.big_heis, pkg.tdual_op, pkg.drinfeld_cop);
    int N = n * n;
    pkg.mu_l = Matrix(N * N, N, F);
    for (int q = 0; q < N; ++q) {
      Element e = pkg.big_heis->embed_actor(Element::basis(pkg.drinfeld_cop, q));
      for (int k = 0; k < N * N; ++k) pkg.mu_l.at(k, q) = e.c[k];
    }
    pkg.mu_r_abstract = inverse(pkg.iota_big) * pkg.mu_l;

    // explicit mu_R: D -> H(A) on the generator families, extended along
    // x (x) a = (x (x) 1)(1 (x) a)
    const HopfPtr& X = pkg.base_dual;
    auto halg = pkg.heis->algebra;
    auto outer = [&](const Element& ap, const Element& xp) {
      Element e = Element::zero(halg);
      for (int p = 0; p < n; ++p) {
        if (ap.c[p].is_zero()) continue;
        for (int q = 0; q < n; ++q)
          if (!xp.c[q].is_zero()) e.c[static_cast<size_t>(p) * n + q] += ap.c[p] * xp.c[q];
      }
      return e;
    };
    std::vector<Element> mu_gen_a, mu_gen_x;
    for (int j = 0; j < n; ++j) {
      // b |-> b_1 a_r S(b_2) a_t # S^{-1}(x^t) x^r
      Element acc = Element::zero(halg);
      for (const auto& [b1, b2, c] : a->comult_row(j)) {
        Element sb2 = antipode(a, Element::basis(a, b2));
        for (int r = 0; r < n; ++r) {
          Element apart_l = Element::basis(a, b1) * Element::basis(a, r);
          if (apart_l.is_zero()) continue;
          for (int t = 0; t < n; ++t) {
            Element apart = (apart_l * sb2 * Element::basis(a, t)).scaled(c);
            if (apart.is_zero()) continue;
            Element xpart = antipode_inverse(X, Element::basis(X, t)) * Element::basis(X, r);
            acc = acc + outer(apart, xpart);
          }
        }
      }
      mu_gen_a.push_back(acc);
    }
    for (int i = 0; i < n; ++i) {
      // y |-> a_r a_t # S^{-1}(x^t) S^{-1}(y) x^r
      Element acc = Element::zero(halg);
      Element sy = antipode_inverse(X, Element::basis(X, i));
      for (int r = 0; r < n; ++r)
        for (int t = 0; t < n; ++t) {
          Element apart = Element::basis(a, r) * Element::basis(a, t);
          if (apart.is_zero()) continue;
          Element xpart = antipode_inverse(X, Element::basis(X, t)) * sy * Element::basis(X, r);
          if (xpart.is_zero()) continue;
          acc = acc + outer(apart, xpart);
        }
      mu_gen_x.push_back(acc);
    }
    pkg.mu_r_explicit = Matrix(N, N, F);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Element v = mu_gen_x[i] * mu_gen_a[j];
        for (int k = 0; k < N; ++k) pkg.mu_r_explicit.at(k, static_cast<size_t>(i) * n + j) = v.c[k];
      }

    pkg.d_on_a = double_action_on_A(pkg);
    pkg.rho_d = Matrix(N, N, F);
    for (int q = 0; q < N; ++q) {
      Matrix m = pkg.d_on_a.actor_matrix(q);
      Matrix col = flatten_endo(m);
      for (int k = 0; k < N; ++k) pkg.rho_d.at(k, q) = col.at(k, 0);
    }
  }
  return pkg;
}

ModuleAlgebraAction double_action_on_A(const DoublePackage& pkg) {
  const HopfPtr& a = pkg.base;
  const HopfPtr& X = pkg.base_dual;
  int n = a->dim;
  const FieldSpec& F = a->field;
  ModuleAlgebraAction adj = adjoint_action(a);
  ModuleAlgebraAction act{pkg.drinfeld, a, {}};
  act.rows.assign(static_cast<size_t>(n) * n * n, {});
  for (int i = 0; i < n; ++i) {
    // (x^i (x) 1): b |-> b <- S^{-1} x^i
    std::vector<Scalar> sinvx(n, Scalar::zero(F));
    for (int m = 0; m < n; ++m) sinvx[m] = X->antipode_inv.at(m, i);
    Matrix y = right_coregular_on_base(a, pkg.pairing.matrix, sinvx);
    for (int j = 0; j < n; ++j) {
      Matrix composite = y * adj.actor_matrix(j);
      for (int b = 0; b < n; ++b) {
        std::vector<Scalar> col(n, Scalar::zero(F));
        for (int k = 0; k < n; ++k) col[k] = composite.at(k, b);
        act.rows[(static_cast<size_t>(i) * n + j) * n + b] = sparsify(col);
      }
    }
  }
  return act;
}

AxiomReport check_double(const DoublePackage& pkg) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const HopfPtr& D = pkg.drinfeld;
  int n = pkg.n();

  // the multiplication yields an associative unital Hopf algebra
  {
    AxiomReport h = verify_hopf(D);
    for (auto& c : h.checks) rep.checks.push_back({"double_" + c.name, c.pass, c.witness});
  }

  // coalgebra equals (A*)^{cop} (x) A coefficientwise
  {
    std::string w;
    const HopfPtr& A = pkg.base;
    const HopfPtr& X = pkg.base_dual;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        TensorElement lhs = coproduct(D, Element::basis(D, i * n + j));
        TensorElement rhs = TensorElement::zero({D, D});
        for (const auto& [p, q, cx] : X->comult_row(i))
          for (const auto& [r, s, ca] : A->comult_row(j))
            rhs.c[static_cast<size_t>(q * n + r) * D->dim + (p * n + s)] += cx * ca;
        if (!(lhs == rhs)) w = "coalgebra mismatch at basis (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
      }
    add("double_coalgebra_factorizes", w);
  }

  // the embeddings of A and (A*)^{cop} are Hopf algebra maps
  {
    std::string w;
    const HopfPtr& A = pkg.base;
    const HopfPtr& X = pkg.base_dual;
    HopfPtr xcop = twist(X, Twist::cop);
    auto check_embed = [&](const HopfPtr& src, const Matrix& emb, const std::string& tag) {
      for (int i = 0; i < n && w.empty(); ++i) {
        for (int j = 0; j < n && w.empty(); ++j) {
          Element lhs(D, emb.apply((Element::basis(src, i) * Element::basis(src, j)).c));
          Element rhs = Element(D, emb.apply(Element::basis(src, i).c)) *
                        Element(D, emb.apply(Element::basis(src, j).c));
          if (!(lhs == rhs)) w = tag + " embedding not multiplicative at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
        }
        if (!w.empty()) break;
        // comultiplicative
        TensorElement lhs = coproduct(D, Element(D, emb.apply(Element::basis(src, i).c)));
        TensorElement srcd = coproduct(src, Element::basis(src, i));
        TensorElement rhs = TensorElement::zero({D, D});
        for (size_t p = 0; p < srcd.c.size(); ++p) {
          if (srcd.c[p].is_zero()) continue;
          auto ix = srcd.unflat(p);
          Element l1(D, emb.apply(Element::basis(src, ix[0]).c));
          Element l2(D, emb.apply(Element::basis(src, ix[1]).c));
          for (int q = 0; q < D->dim; ++q) {
            if (l1.c[q].is_zero()) continue;
            for (int r = 0; r < D->dim; ++r)
              if (!l2.c[r].is_zero())
                rhs.c[static_cast<size_t>(q) * D->dim + r] += srcd.c[p] * l1.c[q] * l2.c[r];
          }
        }
        if (!(lhs == rhs)) w = tag + " embedding not comultiplicative at " + std::to_string(i);
        if (w.empty()) {
          // antipode compatible
          Element lhs2(D, D->antipode.apply(emb.apply(Element::basis(src, i).c)));
          Element rhs2(D, emb.apply(src->antipode.apply(Element::basis(src, i).c)));
          if (!(lhs2 == rhs2)) w = tag + " embedding not antipode-compatible at " + std::to_string(i);
        }
        if (w.empty() && counit_of(D, Element(D, emb.apply(Element::basis(src, i).c))) !=
                             src->counit[i])
          w = tag + " embedding not counit-compatible at " + std::to_string(i);
      }
      if (w.empty() &&
          !(Element(D, emb.apply(Element::unit(src).c)) == Element::unit(D)))
        w = tag + " embedding not unital";
    };
    check_embed(A, pkg.embed_a, "A");
    if (w.empty()) check_embed(xcop, pkg.embed_x, "A*cop");
    add("double_embeddings_hopf", w);
  }

  // R Delta(d) = Delta^op(d) R for every basis d
  {
    std::string w;
    for (int q = 0; q < D->dim && w.empty(); ++q) {
      TensorElement dd = coproduct(D, Element::basis(D, q));
      TensorElement ddop = TensorElement::zero({D, D});
      for (size_t p = 0; p < dd.c.size(); ++p) {
        if (dd.c[p].is_zero()) continue;
        auto ix = dd.unflat(p);
        ddop.c[static_cast<size_t>(ix[1]) * D->dim + ix[0]] += dd.c[p];
      }
      if (!(tensor_multiply(pkg.R, dd) == tensor_multiply(ddop, pkg.R)))
        w = "R-intertwiner fails at basis " + std::to_string(q);
    }
    add("double_r_intertwiner", w);
  }

  // u d u^{-1} = S^2(d)
  {
    std::string w;
    Matrix s2 = D->antipode * D->antipode;
    for (int q = 0; q < D->dim && w.empty(); ++q) {
      Element lhs = pkg.u * Element::basis(D, q) * pkg.u_inv;
      Element rhs(D, s2.apply(Element::basis(D, q).c));
      if (!(lhs == rhs)) w = "u-conjugation fails at basis " + std::to_string(q);
    }
    add("double_u_conjugation", w);
  }

  return rep;
}

AxiomReport check_ybe(const DoublePackage& pkg) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const HopfPtr& D = pkg.drinfeld;
  // R^{-1} = (S (x) id)(R)
  {
    std::string w;
    TensorElement rinv = apply_on_leg(pkg.R, D->antipode, 0, D);
    TensorElement unit2 = TensorElement::unit({D, D});
    if (!(tensor_multiply(rinv, pkg.R) == unit2) || !(tensor_multiply(pkg.R, rinv) == unit2))
      w = "(S (x) id)(R) is not a two-sided inverse of R";
    add("r_inverse", w);
  }
  // Yang-Baxter in D^{(x)3}
  {
    std::string w;
    std::vector<AlgebraPtr> amb = {D, D, D};
    TensorElement r12 = tensor_embed(pkg.R, {0, 1}, amb);
    TensorElement r13 = tensor_embed(pkg.R, {0, 2}, amb);
    TensorElement r23 = tensor_embed(pkg.R, {1, 2}, amb);
    TensorElement lhs = tensor_multiply(tensor_multiply(r12, r13), r23);
    TensorElement rhs = tensor_multiply(tensor_multiply(r23, r13), r12);
    if (!(lhs == rhs)) w = "R12 R13 R23 != R23 R13 R12";
    add("ybe", w);
  }
  return rep;
}

AxiomReport check_tdual(const DoublePackage& pkg) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const HopfPtr& T = pkg.tdual;
  const HopfPtr& A = pkg.base;
  const HopfPtr& X = pkg.base_dual;
  int n = pkg.n();
  int N = n * n;
  const FieldSpec& F = A->field;
  auto tidx = [n](int a, int x) { return a * n + x; };  // a_i (x) x^j at i*n+j

  // as an algebra, T = A^op (x) A*
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        for (int k = 0; k < n && w.empty(); ++k)
          for (int l = 0; l < n && w.empty(); ++l) {
            std::vector<Scalar> expect(N, Scalar::zero(F));
            // (a_i (x) x^j)(a_k (x) x^l) = (a_k a_i) (x) (x^j x^l)
            for (const auto& [am, ca] : A->mult_row(k, i))
              for (const auto& [xm, cx] : X->mult_row(j, l))
                expect[tidx(am, xm)] += ca * cx;
            std::vector<Scalar> got(N, Scalar::zero(F));
            for (const auto& [m, c] : T->mult_row(tidx(i, j), tidx(k, l))) got[m] += c;
            if (expect != got)
              w = "algebra structure of T differs from A^op (x) A* at ((" +
                  std::to_string(i) + "," + std::to_string(j) + "),(" + std::to_string(k) +
                  "," + std::to_string(l) + "))";
          }
    add("tdual_algebra", w);
  }

  // Delta_T(a (x) x) = (a_1 (x) x^r x_1 x^t) (x) (S^{-1}a_t a_2 a_r (x) x_2)
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        std::vector<Scalar> expect(static_cast<size_t>(N) * N, Scalar::zero(F));
        for (const auto& [a1, a2, ca] : A->comult_row(i))
          for (const auto& [x1, x2, cx] : X->comult_row(j)) {
            Scalar c0 = ca * cx;
            for (int r = 0; r < n; ++r)
              for (int t = 0; t < n; ++t) {
                Element xprod = Element::basis(X, r) * Element::basis(X, x1) * Element::basis(X, t);
                if (xprod.is_zero()) continue;
                Element aprod = antipode_inverse(A, Element::basis(A, t)) *
                                Element::basis(A, a2) * Element::basis(A, r);
                if (aprod.is_zero()) continue;
                for (int xp = 0; xp < n; ++xp) {
                  if (xprod.c[xp].is_zero()) continue;
                  for (int ap = 0; ap < n; ++ap) {
                    if (aprod.c[ap].is_zero()) continue;
                    expect[static_cast<size_t>(tidx(a1, xp)) * N + tidx(ap, x2)] +=
                        c0 * xprod.c[xp] * aprod.c[ap];
                  }
                }
              }
          }
        std::vector<Scalar> got(static_cast<size_t>(N) * N, Scalar::zero(F));
        for (const auto& [p, q, c] : T->comult_row(tidx(i, j)))
          got[static_cast<size_t>(p) * N + q] += c;
        if (expect != got)
          w = "explicit Delta_T disagrees with dual(D) at basis (" + std::to_string(i) + "," +
              std::to_string(j) + ")";
      }
    add("tdual_comult", w);
  }

  // S_T(a (x) x) = a_r S^{-1}(a) S^{-1}(a_t) (x) x^t S(x) x^r
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        std::vector<Scalar> expect(N, Scalar::zero(F));
        Element sinv_a = antipode_inverse(A, Element::basis(A, i));
        Element s_x = antipode(X, Element::basis(X, j));
        for (int r = 0; r < n; ++r)
          for (int t = 0; t < n; ++t) {
            Element aprod = Element::basis(A, r) * sinv_a * antipode_inverse(A, Element::basis(A, t));
            if (aprod.is_zero()) continue;
            Element xprod = Element::basis(X, t) * s_x * Element::basis(X, r);
            if (xprod.is_zero()) continue;
            for (int ap = 0; ap < n; ++ap) {
              if (aprod.c[ap].is_zero()) continue;
              for (int xp = 0; xp < n; ++xp)
                if (!xprod.c[xp].is_zero()) expect[tidx(ap, xp)] += aprod.c[ap] * xprod.c[xp];
            }
          }
        std::vector<Scalar> got(N, Scalar::zero(F));
        for (int k = 0; k < N; ++k) got[k] = T->antipode.at(k, tidx(i, j));
        if (expect != got)
          w = "explicit S_T disagrees with dual(D) at basis (" + std::to_string(i) + "," +
              std::to_string(j) + ")";
      }
    add("tdual_antipode", w);
  }

  // counit of T = evaluation against 1_D
  {
    std::string w;
    for (int k = 0; k < N; ++k)
      if (T->counit[k] != pkg.drinfeld->unit[k]) {
        w = "counit of T differs from evaluation at 1_D at basis " + std::to_string(k);
        break;
      }
    add("tdual_counit", w);
  }

  return rep;
}

AxiomReport check_heisenberg(const DoublePackage& pkg) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const SmashAlgebra& H = *pkg.heis;
  const HopfPtr& A = pkg.base;
  const HopfPtr& X = pkg.base_dual;
  int n = pkg.n();
  int N = n * n;

  add("heis_associative", H.algebra->associativity_witness());
  add("heis_unital", H.algebra->unit_witness());
  add("rho_l_bijective", rank(pkg.rho_l) == N ? std::string{} : "rho_L has rank < n^2");

  // rho_L is an algebra map: rho_L(hk) = rho_L(h) rho_L(k) on basis pairs
  {
    std::string w;
    std::vector<Matrix> mats;
    for (int q = 0; q < N; ++q) {
      Matrix m(n, n, A->field);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = pkg.rho_l.at(r * n + c, q);
      mats.push_back(m);
    }
    for (int p = 0; p < N && w.empty(); ++p)
      for (int q = 0; q < N && w.empty(); ++q) {
        Matrix rhs = mats[p] * mats[q];
        Matrix lhs(n, n, A->field);
        for (const auto& [k, c] : H.algebra->mult_row(p, q))
          for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col) lhs.at(r, col) += c * mats[k].at(r, col);
        if (!(lhs == rhs))
          w = "rho_L not multiplicative at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    add("rho_l_homomorphism", w);
  }

  // iota is a unital bijective algebra endomorphism
  add("iota_bijective", rank(pkg.iota) == N ? std::string{} : "iota is singular");
  {
    std::string w;
    Element one = Element::unit(H.algebra);
    if (!(Element(H.algebra, pkg.iota.apply(one.c)) == one)) w = "iota(1) != 1";
    add("iota_unital", w);
  }
  {
    std::string w;
    for (int p = 0; p < N && w.empty(); ++p) {
      Element ip(H.algebra, pkg.iota.apply(Element::basis(H.algebra, p).c));
      for (int q = 0; q < N && w.empty(); ++q) {
        Element iq(H.algebra, pkg.iota.apply(Element::basis(H.algebra, q).c));
        Element lhs(H.algebra,
                    pkg.iota.apply((Element::basis(H.algebra, p) * Element::basis(H.algebra, q)).c));
        if (!(lhs == ip * iq))
          w = "iota not multiplicative at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
    add("iota_multiplicative", w);
  }
  add("rho_r_factors_through_iota",
      pkg.rho_r == pkg.rho_l * pkg.iota ? std::string{} : "rho_R != rho_L o iota");

  // chiral embeddings: a |-> a#1, x |-> 1#x, and their iota twists are
  // algebra maps; the chiral pairs commute elementwise
  {
    std::string w;
    auto emb_a = [&](int i) { return H.embed_carrier(Element::basis(A, i)); };
    auto emb_x = [&](int i) { return H.embed_actor(Element::basis(X, i)); };
    auto tw = [&](const Element& e) { return Element(H.algebra, pkg.iota.apply(e.c)); };
    auto mult_check = [&](auto f, const HopfPtr& src, const std::string& tag) {
      for (int i = 0; i < n && w.empty(); ++i)
        for (int j = 0; j < n && w.empty(); ++j) {
          Element prod_src = Element::basis(src, i) * Element::basis(src, j);
          Element expect = Element::zero(H.algebra);
          for (int k = 0; k < n; ++k)
            if (!prod_src.c[k].is_zero()) {
              Element img = f(k);
              expect = expect + img.scaled(prod_src.c[k]);
            }
          if (!(f(i) * f(j) == expect)) w = tag + " not multiplicative at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")";
        }
    };
    mult_check(emb_a, A, "a|->a#1");
    if (w.empty()) mult_check(emb_x, X, "x|->1#x");
    if (w.empty()) mult_check([&](int i) { return tw(emb_a(i)); }, A, "a|->iota(a#1)");
    if (w.empty()) mult_check([&](int i) { return tw(emb_x(i)); }, X, "x|->iota(1#x)");
    if (w.empty()) {
      for (int i = 0; i < n && w.empty(); ++i)
        for (int j = 0; j < n && w.empty(); ++j) {
          Element l = emb_a(i), r = tw(emb_a(j));
          if (!(l * r == r * l))
            w = "(a#1, iota(b#1)) do not commute at (" + std::to_string(i) + "," +
                std::to_string(j) + ")";
          Element lx = emb_x(i), rx = tw(emb_x(j));
          if (w.empty() && !(lx * rx == rx * lx))
            w = "(1#x, iota(1#y)) do not commute at (" + std::to_string(i) + "," +
                std::to_string(j) + ")";
        }
    }
    add("chiral_embeddings", w);
  }

  return rep;
}

AxiomReport check_moment(const DoublePackage& pkg) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const HopfPtr& D = pkg.drinfeld;
  const SmashAlgebra& V = *pkg.big_heis;
  int N = D->dim;

  auto hom_check = [&](const Matrix& mu, const AlgebraPtr& codom, const std::string& tag) {
    std::string w;
    if (!(Element(codom, mu.apply(Element::unit(D).c)) == Element::unit(codom)))
      w = tag + " not unital";
    for (int p = 0; p < N && w.empty(); ++p) {
      Element ip(codom, mu.apply(Element::basis(D, p).c));
      for (int q = 0; q < N && w.empty(); ++q) {
        Element iq(codom, mu.apply(Element::basis(D, q).c));
        Element lhs(codom, mu.apply((Element::basis(D, p) * Element::basis(D, q)).c));
        if (!(lhs == ip * iq))
          w = tag + " not multiplicative at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
    return w;
  };
  add("mu_l_homomorphism", hom_check(pkg.mu_l, V.algebra, "mu_L"));
  add("mu_r_abstract_homomorphism", hom_check(pkg.mu_r_abstract, V.algebra, "mu_R"));
  add("mu_r_explicit_homomorphism", hom_check(pkg.mu_r_explicit, pkg.heis->algebra, "mu_R_explicit"));

  // images of mu_L and mu_R commute elementwise
  {
    std::string w;
    std::vector<Element> ls, rs;
    for (int q = 0; q < N; ++q) {
      ls.emplace_back(V.algebra, pkg.mu_l.apply(Element::basis(D, q).c));
      rs.emplace_back(V.algebra, pkg.mu_r_abstract.apply(Element::basis(D, q).c));
    }
    for (int p = 0; p < N && w.empty(); ++p)
      for (int q = 0; q < N && w.empty(); ++q)
        if (!(ls[p] * rs[q] == rs[q] * ls[p]))
          w = "mu_L and mu_R images do not commute at (" + std::to_string(p) + "," +
              std::to_string(q) + ")";
    add("moment_maps_commute", w);
  }

  // mu_R_explicit equals the oracle rho_L^{-1} o rho_D
  {
    std::string w;
    Matrix oracle = inverse(pkg.rho_l) * pkg.rho_d;
    if (!(oracle == pkg.mu_r_explicit)) w = "mu_R_explicit differs from rho_L^{-1} o rho_D";
    add("mu_r_explicit_oracle", w);
  }

  // the D(A)-action on A is a module-algebra action
  {
    AxiomReport r = verify_module_algebra(pkg.d_on_a);
    for (auto& c : r.checks) rep.checks.push_back({"d_on_a_" + c.name, c.pass, c.witness});
  }

  return rep;
}

AxiomReport check_pullback(const DoublePackage& pkg) {
  AxiomReport rep;
  std::string w;
  if (!(pkg.rho_l * pkg.mu_r_explicit == pkg.rho_d))
    w = "rho_L o mu_R_explicit != action of D(A) on A";
  rep.checks.push_back({"pullback", w.empty(), w});
  return rep;
}

}  // namespace qhr
