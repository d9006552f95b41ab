#pragma once

namespace focalpair {

/// Dimensionless parameters of two distant two-level atoms coupled through
/// an optical element. Time is measured in units of the single-atom decay
/// (Gamma = 1), so the retardation of the exchanged field enters through
/// gamma_tau = Gamma*tau and the accumulated optical phase through
/// phase = omega_0*tau.
struct SystemParams {
  double kappa = 0.0;      ///< fraction of the emitted field the element redirects, in [0, 1]
  double phase = 0.0;      ///< omega_0 * tau in radians
  double gamma_tau = 0.0;  ///< Gamma * tau, >= 0

  /// Throws std::domain_error if any field is out of range.
  void validate() const;
};

/// Photon-exchange coefficients between the atoms, in units of Gamma.
struct CollectiveRates {
  double gamma_12 = 0.0;  ///< cross-damping rate
  double omega_12 = 0.0;  ///< coherent exchange shift
};

/// Exchange coefficients at time t. They vanish identically for
/// t <= gamma_tau: the atoms evolve independently until the first retarded
/// signal from the partner arrives, and the step turns on strictly after
/// t = gamma_tau.
CollectiveRates collective_rates(const SystemParams& p, double t);

/// Level energies of the coupled pair once the exchange is active, for a
/// bare transition frequency omega_0 (same units as omega_0).
struct CollectiveEnergies {
  double ground = 0.0;
  double antisymmetric = 0.0;
  double symmetric = 0.0;
  double excited = 0.0;
};

CollectiveEnergies collective_energies(const SystemParams& p, double omega_0);

}  // namespace focalpair
