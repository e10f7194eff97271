#pragma once

#include "qhr/doubles.hpp"

namespace qhr {

/// Canonical elements of D(A) (x) D(A) and D(A) (x) H(A), with inverses
/// obtained by linear solve in the tensor-product algebra.
struct CanonicalElements {
  TensorElement r12, r21;  // in D (x) D
  TensorElement l;         // R_21 R_12
  TensorElement theta, omega;              // D (x) H
  TensorElement theta_inv, omega_inv;      // verified two-sided
  TensorElement theta_tilde, omega_tilde;  // (id (x) iota^{-1}) twists
  TensorElement u1, u1_inv;  // u (x) 1
  TensorElement lhat;        // Omega u1^{-1} Theta^{-1} Omega^{-1}
  TensorElement lhat_prime;  // Omega Theta^{-1} Omega^{-1}
};

/// Inverse of a tensor-product-algebra element by linear solve; throws
/// Singular when no two-sided inverse exists.
TensorElement tensor_inverse(const TensorElement& t);

CanonicalElements build_canonical(const DoublePackage& d);

/// R_12 Theta_1 Theta_2 = Theta_2 Theta_1 R_12, R_12 Omega_2 Omega_1 =
/// Omega_1 Omega_2 R_12, and R_12 Theta_1 Omega_2^{-1} = Omega_2^{-1}
/// Theta_1, all in D (x) D (x) H.
AxiomReport check_heis_rels(const DoublePackage& d, const CanonicalElements& c);

/// Reflection equation for L in D^{(x)3} (with L_1 = R_31 R_13, L_2 =
/// R_32 R_23) and for LHat, LHat' in D (x) D (x) H (X_1 = X_13, X_2 = X_23).
AxiomReport check_reflection(const DoublePackage& d, const CanonicalElements& c);

/// The five identities tying mu_R to the canonical elements:
/// (id (x) mu_R)(R_12) = ThetaTilde, (id (x) mu_R)(R_21) = Omega OmegaTilde,
/// (id (x) mu_R)(L) = Omega OmegaTilde ThetaTilde, Theta^{-1}Omega^{-1} =
/// u_1 OmegaTilde ThetaTilde, and (id (x) mu_R)(L) = LHat.
AxiomReport check_mu_r_rtt(const DoublePackage& d, const CanonicalElements& c);

/// LHat' satisfies the reflection equation; the discrepancy
/// (id (x) mu_R)(L) - LHat' equals Omega(u_1^{-1} - 1)Theta^{-1}Omega^{-1}
/// and is recorded (zero exactly when u acts trivially).
AxiomReport frt_presentation_check(const DoublePackage& d, const CanonicalElements& c);

/// Full RTT suite on one base algebra (requires a stage-4 package).
AxiomReport check_rtt(const DoublePackage& d);

}  // namespace qhr
