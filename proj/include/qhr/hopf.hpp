#pragma once

#include "qhr/algebra.hpp"

namespace qhr {

/// A finite-dimensional Hopf algebra as structure-constant tensors.
/// Comultiplication rows are sparse: comult[i] lists (j, k, c) with
/// Delta(e_i) = sum c e_j (x) e_k.
struct HopfAlgebra : Algebra {
  std::vector<std::vector<std::tuple<int, int, Scalar>>> comult;
  std::vector<Scalar> counit;
  Matrix antipode;
  Matrix antipode_inv;  // computed at construction and cached

  const std::vector<std::tuple<int, int, Scalar>>& comult_row(int i) const { return comult[i]; }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// One verified identity: name, pass flag, and the first failing basis
/// multi-index as a witness string when it fails.
struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + ": " + c.witness;
    return {};
  }
};

/// Bilinear form pairing A with a presentation of its dual.
struct HopfPairing {
  HopfPtr left;   // A
  HopfPtr right;  // A*
  Matrix matrix;  // P(i,j) = <e_i, f_j>
};

/// Finalizes a Hopf algebra under construction: computes and caches the
/// antipode inverse. Throws AxiomFailure if S is singular.
HopfPtr finalize_hopf(HopfAlgebra h);

/// Checks every Hopf axiom exactly; one entry per axiom.
AxiomReport verify_hopf(const HopfPtr& a);

/// (Delta (x) id^{k-2}) o ... o Delta applied to an element; k = 1 returns
/// the element itself.
TensorElement iterated_coproduct(const HopfPtr& a, const Element& e, int k);

/// Coefficient tensor of Delta(e) in A (x) A.
TensorElement coproduct(const HopfPtr& a, const Element& e);

enum class Twist { op, cop };

/// A^{op} = (A, m^{op}, Delta, S^{-1}) or A^{cop} = (A, m, Delta^{op}, S^{-1}).
HopfPtr twist(const HopfPtr& a, Twist which);

/// The dual Hopf algebra on the dual basis, together with the canonical
/// (identity-matrix) pairing.
std::pair<HopfPtr, HopfPairing> dual(const HopfPtr& a);

/// Checks pairing axioms (1)-(4) and nondegeneracy.
AxiomReport verify_pairing(const HopfPairing& p);

/// Applies the antipode matrix to an element.
Element antipode(const HopfPtr& a, const Element& e);
Element antipode_inverse(const HopfPtr& a, const Element& e);

/// epsilon(e) as a field scalar.
Scalar counit_of(const HopfPtr& a, const Element& e);

/// <u, v> for coefficient vectors u over A, v over A* under pairing P.
Scalar pair_vectors(const Matrix& p, const std::vector<Scalar>& u, const std::vector<Scalar>& v);

}  // namespace qhr
