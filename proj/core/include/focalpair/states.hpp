#pragma once

#include <Eigen/Dense>
#include <complex>

namespace focalpair {

using Complex = std::complex<double>;

/// Two-atom density matrix in the collective basis
/// {ground, symmetric, antisymmetric, doubly excited}. The dissipative
/// dynamics preserves the X pattern, so only these entries can be nonzero.
/// rho_as follows the <a|rho|s> convention.
struct XState {
  double rho_gg = 0.0;
  double rho_ee = 0.0;
  double rho_ss = 0.0;
  double rho_aa = 0.0;
  Complex rho_as{0.0, 0.0};  ///< <a|rho|s>
  Complex rho_eg{0.0, 0.0};  ///< <e|rho|g>

  double trace() const { return rho_gg + rho_ee + rho_ss + rho_aa; }

  /// Checks unit trace (1e-12), population ranges ([-1e-12, 1 + 1e-12]) and
  /// the positivity minors |rho_as|^2 <= rho_ss*rho_aa + 1e-10 and
  /// |rho_eg|^2 <= rho_ee*rho_gg + 1e-10. Throws std::domain_error.
  void validate() const;
};

/// Full 4x4 density matrix in the product basis
/// (|g1 g2>, |g1 e2>, |e1 g2>, |e1 e2>).
struct TwoQubitState {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

  double trace_real() const { return rho.trace().real(); }
  double min_eigenvalue() const;
  /// Largest entry of rho - rho^dagger, max norm.
  double hermiticity_defect() const;
  /// Largest magnitude among the entries outside the X pattern.
  double x_leakage() const;

  /// Hermiticity within 1e-12 (max norm), |trace - 1| <= 1e-12, smallest
  /// eigenvalue >= -1e-10. Throws std::domain_error.
  void validate() const;
};

/// Expands an X-form collective state into the product basis.
TwoQubitState collective_to_bare(const XState& x);

/// Inverse of collective_to_bare. Rejects (std::domain_error) matrices whose
/// entries outside the X pattern exceed x_tol in magnitude.
XState bare_to_collective(const TwoQubitState& s, double x_tol = 1e-10);

}  // namespace focalpair
