#pragma once

#include "qhr/hopf.hpp"

namespace qhr {

/// An action tensor of a Hopf algebra on an algebra. Rows are sparse:
/// rows[h*dim(M)+m] lists (m', c) with e_h . e_m = sum c e_{m'}.
struct ModuleAlgebraAction {
  HopfPtr actor;
  AlgebraPtr carrier;
  std::vector<std::vector<std::pair<int, Scalar>>> rows;

  const std::vector<std::pair<int, Scalar>>& row(int h, int m) const {
    return rows[static_cast<size_t>(h) * carrier->dim + m];
  }
  /// Representation matrix of the basis actor e_h on the carrier.
  Matrix actor_matrix(int h) const;
};

Element act_apply(const ModuleAlgebraAction& act, const Element& h, const Element& m);

/// Checks unit law, Leibniz law, and the module law exactly.
AxiomReport verify_module_algebra(const ModuleAlgebraAction& act);

/// a |> b = a_1 b S(a_2); A acting on itself.
ModuleAlgebraAction adjoint_action(const HopfPtr& a);

/// a -> x = <a, x_2> x_1; A acting on A* through the pairing.
ModuleAlgebraAction left_coregular(const HopfPairing& p);

/// x <- a = <a, x_1> x_2; actor is A^op.
ModuleAlgebraAction right_coregular(const HopfPairing& p);

/// x -> b = <b_2, x> b_1; the predual-side coregular action of A* on A,
/// the one entering the Heisenberg double.
ModuleAlgebraAction dual_left_coregular(const HopfPairing& p);

/// The smash product M # H for a verified module-algebra action.
struct SmashAlgebra {
  AlgebraPtr algebra;  // underlying algebra on M (x) H, index m*dim(H)+h
  AlgebraPtr carrier;
  HopfPtr actor;
  ModuleAlgebraAction action;

  int carrier_dim() const { return carrier->dim; }
  int actor_dim() const { return actor->dim; }
  size_t index(int m, int h) const { return static_cast<size_t>(m) * actor->dim + h; }

  Element embed_carrier(const Element& m) const;  // m # 1
  Element embed_actor(const Element& h) const;    // 1 # h
};

/// Builds M # H with (m#x)(n#y) = m(x_1 . n) # x_2 y. Verifies that the
/// action is a module-algebra action and that the result is associative
/// and unital; throws ActionInvalid / AxiomFailure otherwise.
SmashAlgebra smash_product(const AlgebraPtr& m, const HopfPtr& h, const ModuleAlgebraAction& act,
                           const std::string& name, bool verify_action = true);

}  // namespace qhr
