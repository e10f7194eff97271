#include "qhr/catalog.hpp"

#include <algorithm>
#include <array>

namespace qhr {

namespace {

HopfPtr group_hopf(const std::string& name, const std::vector<std::string>& labels,
                   const std::vector<std::vector<int>>& table, int identity) {
  int n = static_cast<int>(labels.size());
  FieldSpec F = FieldSpec::rational();
  HopfAlgebra h;
  h.name = name;
  h.field = F;
  h.dim = n;
  h.basis = labels;
  h.mult.assign(static_cast<size_t>(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.set_mult(i, j, {{table[i][j], Scalar::one(F)}});
  h.unit.assign(n, Scalar::zero(F));
  h.unit[identity] = Scalar::one(F);
  h.comult.assign(n, {});
  for (int i = 0; i < n; ++i) h.comult[i].emplace_back(i, i, Scalar::one(F));
  h.counit.assign(n, Scalar::one(F));
  h.antipode = Matrix(n, n, F);
  for (int i = 0; i < n; ++i) {
    int inv = -1;
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity) { inv = j; break; }
    h.antipode.at(inv, i) = Scalar::one(F);
  }
  return finalize_hopf(std::move(h));
}

HopfPtr cyclic_group(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return group_hopf("group:Z/" + std::to_string(n), labels, table, 0);
}

HopfPtr symmetric_group_3() {
  // permutations of {0,1,2} in a fixed order
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::string> labels = {"e", "r", "r2", "s", "sr", "sr2"};
  int n = 6;
  auto compose = [&](int i, int j) {
    // (p_i p_j)(k) = p_i(p_j(k))
    std::array<int, 3> c;
    for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
    for (int m = 0; m < n; ++m)
      if (perms[m] == c) return m;
    return -1;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = compose(i, j);
  return group_hopf("group:S3", labels, table, 0);
}

// The Taft family: basis g^a x^b (0 <= a,b < n), g^n = 1, x^n = 0,
// x g = q g x. Sweedler is the n = 2, q = -1 member over the rationals.
HopfPtr taft_like(const std::string& name, int n, const FieldSpec& F, const Scalar& q) {
  int dim = n * n;
  auto idx = [n](int a, int b) { return a * n + b; };
  HopfAlgebra h;
  h.name = name;
  h.field = F;
  h.dim = dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::string l;
      if (a == 0 && b == 0) l = "1";
      else {
        if (a == 1) l = "g";
        else if (a > 1) l = "g^" + std::to_string(a);
        if (b > 0) {
          if (!l.empty()) l += "*";
          l += b == 1 ? "x" : "x^" + std::to_string(b);
        }
      }
      h.basis.push_back(l);
    }
  h.mult.assign(static_cast<size_t>(dim) * dim, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (b + d >= n) continue;  // x^n = 0
          Scalar coef = q.pow(static_cast<long>(b) * c);
          h.set_mult(idx(a, b), idx(c, d), {{idx((a + c) % n, b + d), coef}});
        }
  h.unit.assign(dim, Scalar::zero(F));
  h.unit[idx(0, 0)] = Scalar::one(F);
  h.counit.assign(dim, Scalar::zero(F));
  for (int a = 0; a < n; ++a) h.counit[idx(a, 0)] = Scalar::one(F);

  // comultiplication: extend Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x
  // multiplicatively through the algebra part built above
  auto alg = std::make_shared<const Algebra>(static_cast<const Algebra&>(h));
  std::vector<AlgebraPtr> aa = {alg, alg};
  auto basis_tensor = [&](int i, int j) {
    TensorElement t = TensorElement::zero(aa);
    t.c[static_cast<size_t>(i) * dim + j] = Scalar::one(F);
    return t;
  };
  TensorElement dg = basis_tensor(idx(1, 0), idx(1, 0));
  TensorElement dx = basis_tensor(idx(0, 1), idx(0, 0)) + basis_tensor(idx(1, 0), idx(0, 1));
  h.comult.assign(dim, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      TensorElement d = TensorElement::unit(aa);
      for (int i = 0; i < a; ++i) d = tensor_multiply(d, dg);
      for (int i = 0; i < b; ++i) d = tensor_multiply(d, dx);
      for (size_t p = 0; p < d.c.size(); ++p) {
        if (d.c[p].is_zero()) continue;
        auto ix = d.unflat(p);
        h.comult[idx(a, b)].emplace_back(ix[0], ix[1], d.c[p]);
      }
    }

  // antipode on generators: S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended
  // anti-multiplicatively: S(g^a x^b) = S(x)^b S(g)^a
  Element sg = Element::basis(alg, idx((n - 1) % n, 0));
  Element sx = (sg * Element::basis(alg, idx(0, 1))).scaled(Scalar::of_int(F, -1));
  h.antipode = Matrix(dim, dim, F);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Element s = Element::unit(alg);
      for (int i = 0; i < b; ++i) s = s * sx;
      for (int i = 0; i < a; ++i) s = s * sg;
      for (int k = 0; k < dim; ++k) h.antipode.at(k, idx(a, b)) = s.c[k];
    }
  return finalize_hopf(std::move(h));
}

HopfPtr build_checked(HopfPtr h) {
  AxiomReport rep = verify_hopf(h);
  if (!rep.ok())
    throw AxiomFailure("catalog algebra '" + h->name + "' failed verification: " +
                       rep.first_failure());
  return h;
}

}  // namespace

HopfPtr catalog_build(const std::string& name) {
  auto starts = [&](const std::string& p) {
    return name.size() > p.size() && name.compare(0, p.size(), p) == 0;
  };
  if (name == "trivial") {
    return build_checked(group_hopf("trivial", {"1"}, {{0}}, 0));
  }
  if (starts("group:Z/")) {
    int n = std::stoi(name.substr(8));
    if (n < 1 || n > 4) throw UnknownName("unsupported cyclic group order in '" + name + "'");
    return build_checked(cyclic_group(n));
  }
  if (name == "group:S3") return build_checked(symmetric_group_3());
  if (starts("dual_group:")) {
    HopfPtr g = catalog_build("group:" + name.substr(11));
    auto [d, p] = dual(g);
    HopfAlgebra dd = *d;
    dd.name = name;
    return build_checked(finalize_hopf(std::move(dd)));
  }
  if (name == "sweedler") {
    return build_checked(taft_like("sweedler", 2, FieldSpec::rational(),
                                   Scalar::of_int(FieldSpec::rational(), -1)));
  }
  if (starts("taft:")) {
    int n = std::stoi(name.substr(5));
    if (n < 2) throw UnknownName("taft order must be >= 2 in '" + name + "'");
    FieldSpec F = FieldSpec::cyclotomic(n);
    return build_checked(taft_like(name, n, F, Scalar::zeta(F)));
  }
  throw UnknownName("unknown catalog algebra '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"trivial",      "group:Z/2",      "group:Z/3", "group:Z/4", "group:S3",
          "dual_group:Z/2", "dual_group:S3", "sweedler",  "taft:2",    "taft:3"};
}

}  // namespace qhr
