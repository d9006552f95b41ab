#include "focalpair/params.hpp"

#include <cmath>
#include <stdexcept>

namespace focalpair {

void SystemParams::validate() const {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw std::domain_error("kappa must lie in [0, 1]");
  }
  if (!(gamma_tau >= 0.0) || !std::isfinite(gamma_tau)) {
    throw std::domain_error("gamma_tau must be finite and >= 0");
  }
  if (!std::isfinite(phase)) {
    throw std::domain_error("phase must be finite");
  }
}

CollectiveRates collective_rates(const SystemParams& p, double t) {
  p.validate();
  if (t <= p.gamma_tau) {
    return {0.0, 0.0};
  }
  return {p.kappa * std::cos(p.phase), 0.5 * p.kappa * std::sin(p.phase)};
}

CollectiveEnergies collective_energies(const SystemParams& p, double omega_0) {
  p.validate();
  const double omega_12 = 0.5 * p.kappa * std::sin(p.phase);
  return {0.0, omega_0 - omega_12, omega_0 + omega_12, 2.0 * omega_0};
}

}  // namespace focalpair
