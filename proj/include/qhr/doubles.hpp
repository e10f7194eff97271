#pragma once

#include <optional>

#include "qhr/actions.hpp"

namespace qhr {

/// D(A), T(A), H(A), H(T(A)^op) and the canonical data connecting them.
/// Built in stages; every stage fail-fasts on a broken identity.
///
/// Basis conventions (n = dim A):
///   D(A):    x^i (x) a_j at index i*n + j
///   T(A):    dual basis of D(A), same index set; as A^op (x) A*, the basis
///            vector a_i (x) x^j sits at index i*n + j
///   H(A):    a_i # x^j at index i*n + j
///   H(T^op): t_p # d_q at index p*n^2 + q
struct DoublePackage {
  HopfPtr base;       // A
  HopfPtr base_dual;  // A*
  HopfPairing pairing;

  HopfPtr drinfeld;  // D(A)
  Matrix embed_a;    // A -> D, a |-> 1 (x) a         (n^2 x n)
  Matrix embed_x;    // A* -> D, x |-> x (x) 1        (n^2 x n)
  TensorElement R;   // in D (x) D
  Element u, u_inv;  // u = S(a_i)S(x^i) in D

  HopfPtr tdual;  // T(A) = D(A)^*

  std::optional<SmashAlgebra> heis;  // H(A) = A # A*
  Matrix rho_l, rho_r;               // H(A) -> End(A), endomorphisms flattened row-major
  Matrix iota;                       // automorphism of H(A)

  HopfPtr tdual_op;      // T(A)^op
  HopfPtr drinfeld_cop;  // D(A)^cop
  std::optional<SmashAlgebra> big_heis;  // H(T^op) = T^op # D^cop
  Matrix iota_big;
  Matrix mu_l;            // D -> H(T^op)
  Matrix mu_r_abstract;   // iota_big^{-1} o mu_l
  Matrix mu_r_explicit;   // D -> H(A)
  ModuleAlgebraAction d_on_a;  // the D(A)-action on A
  Matrix rho_d;                // D -> End(A) flattened

  int n() const { return base->dim; }
  Element embed_base(const Element& a) const;       // into D
  Element embed_base_dual(const Element& x) const;  // into D
};

/// Stage 1: H(A), rho_L, rho_R, iota.  Stage 2: + D(A), R, u.  Stage 3:
/// + T(A).  Stage 4: + H(T^op), iota_big, all three moment maps and the
/// D(A)-action on A.
DoublePackage build_double_package(const HopfPtr& a, int stage = 4);

/// Identity suites (exact; one AxiomCheck per identity).
AxiomReport check_double(const DoublePackage& d);      // assoc/coalgebra/RDelta/u-conjugation
AxiomReport check_ybe(const DoublePackage& d);         // YBE + R inverse
AxiomReport check_tdual(const DoublePackage& d);       // two T(A) constructions agree
AxiomReport check_heisenberg(const DoublePackage& d);  // rho_L iso, iota automorphism, chiral
AxiomReport check_moment(const DoublePackage& d);      // mu homomorphisms, commutant, oracle
AxiomReport check_pullback(const DoublePackage& d);    // rho_L o mu_R = d_on_a

/// The module-algebra action of D(A) on A (adjoint + right coregular parts).
ModuleAlgebraAction double_action_on_A(const DoublePackage& d);

/// Coefficients of Delta_D(d) as a TensorElement over {D, D}.
TensorElement drinfeld_coproduct(const DoublePackage& d, const Element& e);

}  // namespace qhr
