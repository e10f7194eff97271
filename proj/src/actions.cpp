#include "qhr/actions.hpp"

namespace qhr {

Matrix ModuleAlgebraAction::actor_matrix(int h) const {
  Matrix m(carrier->dim, carrier->dim, carrier->field);
  for (int j = 0; j < carrier->dim; ++j)
    for (const auto& [k, c] : row(h, j)) m.at(k, j) += c;
  return m;
}

Element act_apply(const ModuleAlgebraAction& act, const Element& h, const Element& m) {
  Element r = Element::zero(act.carrier);
  for (int i = 0; i < act.actor->dim; ++i) {
    if (h.c[i].is_zero()) continue;
    for (int j = 0; j < act.carrier->dim; ++j) {
      if (m.c[j].is_zero()) continue;
      Scalar f = h.c[i] * m.c[j];
      for (const auto& [k, c] : act.row(i, j)) r.c[k] += f * c;
    }
  }
  return r;
}

AxiomReport verify_module_algebra(const ModuleAlgebraAction& act) {
  AxiomReport rep;
  auto add = [&rep](const std::string& name, const std::string& witness) {
    rep.checks.push_back({name, witness.empty(), witness});
  };
  const HopfPtr& H = act.actor;
  const AlgebraPtr& M = act.carrier;

  // unit law: h . 1_M = eps(h) 1_M
  {
    std::string w;
    Element one = Element::unit(M);
    for (int h = 0; h < H->dim && w.empty(); ++h) {
      Element lhs = act_apply(act, Element::basis(H, h), one);
      if (!(lhs == one.scaled(H->counit[h])))
        w = "unit law fails at actor basis " + std::to_string(h);
    }
    add("action_unit", w);
  }

  // Leibniz: h . (mn) = (h_1 . m)(h_2 . n)
  {
    std::string w;
    for (int h = 0; h < H->dim && w.empty(); ++h) {
      const auto& d = H->comult_row(h);
      for (int m = 0; m < M->dim && w.empty(); ++m)
        for (int n = 0; n < M->dim && w.empty(); ++n) {
          Element lhs =
              act_apply(act, Element::basis(H, h), Element::basis(M, m) * Element::basis(M, n));
          Element rhs = Element::zero(M);
          for (const auto& [h1, h2, c] : d) {
            Element l = act_apply(act, Element::basis(H, h1), Element::basis(M, m));
            Element r = act_apply(act, Element::basis(H, h2), Element::basis(M, n));
            rhs = rhs + (l * r).scaled(c);
          }
          if (!(lhs == rhs))
            w = "Leibniz law fails at (h,m,n) = (" + std::to_string(h) + "," +
                std::to_string(m) + "," + std::to_string(n) + ")";
        }
    }
    add("action_leibniz", w);
  }

  // module law: (hk) . m = h . (k . m)
  {
    std::string w;
    for (int h = 0; h < H->dim && w.empty(); ++h)
      for (int k = 0; k < H->dim && w.empty(); ++k) {
        Element hk = Element::basis(H, h) * Element::basis(H, k);
        for (int m = 0; m < M->dim && w.empty(); ++m) {
          Element lhs = act_apply(act, hk, Element::basis(M, m));
          Element rhs = act_apply(act, Element::basis(H, h),
                                  act_apply(act, Element::basis(H, k), Element::basis(M, m)));
          if (!(lhs == rhs))
            w = "module law fails at (h,k,m) = (" + std::to_string(h) + "," +
                std::to_string(k) + "," + std::to_string(m) + ")";
        }
      }
    add("action_module", w);
  }

  return rep;
}

ModuleAlgebraAction adjoint_action(const HopfPtr& a) {
  ModuleAlgebraAction act{a, a, {}};
  act.rows.assign(static_cast<size_t>(a->dim) * a->dim, {});
  for (int h = 0; h < a->dim; ++h)
    for (int b = 0; b < a->dim; ++b) {
      Element r = Element::zero(a);
      for (const auto& [h1, h2, c] : a->comult_row(h)) {
        Element v = Element::basis(a, h1) * Element::basis(a, b) *
                    antipode(a, Element::basis(a, h2));
        r = r + v.scaled(c);
      }
      auto& row = act.rows[static_cast<size_t>(h) * a->dim + b];
      for (int k = 0; k < a->dim; ++k)
        if (!r.c[k].is_zero()) row.push_back({k, r.c[k]});
    }
  return act;
}

ModuleAlgebraAction left_coregular(const HopfPairing& p) {
  const HopfPtr& A = p.left;
  const HopfPtr& D = p.right;
  ModuleAlgebraAction act{A, D, {}};
  act.rows.assign(static_cast<size_t>(A->dim) * D->dim, {});
  for (int a = 0; a < A->dim; ++a)
    for (int x = 0; x < D->dim; ++x) {
      std::vector<Scalar> r(D->dim, Scalar::zero(A->field));
      for (const auto& [x1, x2, c] : D->comult_row(x)) {
        const Scalar& pv = p.matrix.at(a, x2);
        if (!pv.is_zero()) r[x1] += c * pv;
      }
      auto& row = act.rows[static_cast<size_t>(a) * D->dim + x];
      for (int k = 0; k < D->dim; ++k)
        if (!r[k].is_zero()) row.push_back({k, r[k]});
    }
  return act;
}

ModuleAlgebraAction right_coregular(const HopfPairing& p) {
  const HopfPtr& D = p.right;
  HopfPtr aop = twist(p.left, Twist::op);
  ModuleAlgebraAction act{aop, D, {}};
  act.rows.assign(static_cast<size_t>(aop->dim) * D->dim, {});
  for (int a = 0; a < aop->dim; ++a)
    for (int x = 0; x < D->dim; ++x) {
      std::vector<Scalar> r(D->dim, Scalar::zero(D->field));
      for (const auto& [x1, x2, c] : D->comult_row(x)) {
        const Scalar& pv = p.matrix.at(a, x1);
        if (!pv.is_zero()) r[x2] += c * pv;
      }
      auto& row = act.rows[static_cast<size_t>(a) * D->dim + x];
      for (int k = 0; k < D->dim; ++k)
        if (!r[k].is_zero()) row.push_back({k, r[k]});
    }
  return act;
}

ModuleAlgebraAction dual_left_coregular(const HopfPairing& p) {
  const HopfPtr& A = p.left;
  const HopfPtr& D = p.right;
  ModuleAlgebraAction act{D, A, {}};
  act.rows.assign(static_cast<size_t>(D->dim) * A->dim, {});
  for (int x = 0; x < D->dim; ++x)
    for (int b = 0; b < A->dim; ++b) {
      std::vector<Scalar> r(A->dim, Scalar::zero(A->field));
      for (const auto& [b1, b2, c] : A->comult_row(b)) {
        const Scalar& pv = p.matrix.at(b2, x);
        if (!pv.is_zero()) r[b1] += c * pv;
      }
      auto& row = act.rows[static_cast<size_t>(x) * A->dim + b];
      for (int k = 0; k < A->dim; ++k)
        if (!r[k].is_zero()) row.push_back({k, r[k]});
    }
  return act;
}

Element SmashAlgebra::embed_carrier(const Element& m) const {
  Element r = Element::zero(algebra);
  for (int i = 0; i < carrier->dim; ++i) {
    if (m.c[i].is_zero()) continue;
    for (int h = 0; h < actor->dim; ++h)
      if (!actor->unit[h].is_zero()) r.c[index(i, h)] += m.c[i] * actor->unit[h];
  }
  return r;
}

Element SmashAlgebra::embed_actor(const Element& h) const {
  Element r = Element::zero(algebra);
  for (int x = 0; x < actor->dim; ++x) {
    if (h.c[x].is_zero()) continue;
    for (int i = 0; i < carrier->dim; ++i)
      if (!carrier->unit[i].is_zero()) r.c[index(i, x)] += h.c[x] * carrier->unit[i];
  }
  return r;
}

SmashAlgebra smash_product(const AlgebraPtr& m, const HopfPtr& h, const ModuleAlgebraAction& act,
                           const std::string& name, bool verify_action) {
  if (act.actor != h || act.carrier != m)
    throw ActionInvalid("smash_product: action does not match the given factors");
  if (verify_action) {
    AxiomReport rep = verify_module_algebra(act);
    if (!rep.ok()) throw ActionInvalid("smash_product: " + rep.first_failure());
  }
  int dm = m->dim, dh = h->dim;
  auto alg = std::make_shared<Algebra>();
  alg->name = name;
  alg->field = m->field;
  alg->dim = dm * dh;
  for (int i = 0; i < dm; ++i)
    for (int x = 0; x < dh; ++x) alg->basis.push_back(m->basis[i] + "#" + h->basis[x]);
  alg->unit.assign(static_cast<size_t>(dm) * dh, Scalar::zero(m->field));
  for (int i = 0; i < dm; ++i)
    for (int x = 0; x < dh; ++x) {
      if (!m->unit[i].is_zero() && !h->unit[x].is_zero())
        alg->unit[static_cast<size_t>(i) * dh + x] = m->unit[i] * h->unit[x];
    }
  alg->mult.assign(static_cast<size_t>(alg->dim) * alg->dim, {});
  // (e_i # e_x)(e_j # e_y) = sum_{Delta(x)} c e_i(e_{x1} . e_j) # e_{x2} e_y
  for (int i = 0; i < dm; ++i)
    for (int x = 0; x < dh; ++x) {
      size_t li = static_cast<size_t>(i) * dh + x;
      for (int j = 0; j < dm; ++j)
        for (int y = 0; y < dh; ++y) {
          size_t rj = static_cast<size_t>(j) * dh + y;
          std::vector<Scalar> out(static_cast<size_t>(dm) * dh, Scalar::zero(m->field));
          for (const auto& [x1, x2, c] : h->comult_row(x)) {
            // carrier part: e_i * (e_{x1} . e_j)
            for (const auto& [jj, cj] : act.row(x1, j)) {
              for (const auto& [mi, cm] : m->mult_row(i, jj)) {
                Scalar f = c * cj * cm;
                for (const auto& [hk, ch] : h->mult_row(x2, y))
                  out[static_cast<size_t>(mi) * dh + hk] += f * ch;
              }
            }
          }
          auto& row = alg->mult[li * alg->dim + rj];
          for (size_t k = 0; k < out.size(); ++k)
            if (!out[k].is_zero()) row.push_back({static_cast<int>(k), out[k]});
        }
    }
  {
    std::string w = alg->associativity_witness();
    if (w.empty()) w = alg->unit_witness();
    if (!w.empty()) throw AxiomFailure("smash product '" + name + "': " + w);
  }
  SmashAlgebra s;
  s.algebra = alg;
  s.carrier = m;
  s.actor = h;
  s.action = act;
  return s;
}

}  // namespace qhr
