#pragma once

#include "qhr/doubles.hpp"

namespace qhr {

/// Quantum Hamiltonian reduction V // mu(A) at an ideal I of A:
/// the A-invariants of V / V mu(I) with the induced product.
struct ReductionResult {
  AlgebraPtr ambient;  // V
  std::vector<std::vector<Scalar>> ideal_basis;  // echelon basis of V mu(I)
  int quotient_dim = 0;
  Matrix to_quotient;    // V -> V / V mu(I)  (q x N)
  Matrix from_quotient;  // fixed complement representatives (N x q)
  std::vector<std::vector<Scalar>> invariant_basis;  // representatives in V
  Matrix project;  // V -> invariant coordinates (k x N); left inverse of the
                   // representative embedding composed with quotient reduction
  AlgebraPtr reduced;  // the reduction as an algebra on the invariant basis
};

/// phi : H(A) -> H(T(A)^op) // mu_L(A) in reduction coordinates, with inverse.
struct PhiIsomorphism {
  Matrix matrix;   // k x n^2, columns indexed by the H(A) basis
  Matrix inverse;  // n^2 x k
};

/// Echelon basis of ker(eps_A); verified to be a two-sided ad-stable ideal.
std::vector<std::vector<Scalar>> augmentation_ideal(const HopfPtr& a);

/// Reduction of V by the ideal of A spanned by `ideal` along the algebra map
/// mu : A -> V (given by its matrix). Verifies that the left ideal V mu(I)
/// is stable, that the induced A-action and product on the invariants are
/// representative-independent, and that the result is associative and unital.
ReductionResult hamiltonian_reduce(const AlgebraPtr& v, const HopfPtr& h, const Matrix& mu,
                                   const std::vector<std::vector<Scalar>>& ideal);

/// The map a # x |-> (a (x) x_1 S x_3) (x) x_2, landing in the reduction.
/// Verified invariant, bijective, unital and multiplicative.
PhiIsomorphism build_phi(const DoublePackage& d, const ReductionResult& red);

/// (i) mu_R(d) is invariant mod the ideal for every basis d; (ii) phi^{-1}
/// composed with the projected mu_R_abstract equals mu_R_explicit.
AxiomReport residual_moment_map(const DoublePackage& d, const ReductionResult& red,
                                const PhiIsomorphism& phi);

/// Full reduction suite on one base algebra (requires a stage-4 package).
AxiomReport check_reduction(const DoublePackage& d);

}  // namespace qhr
