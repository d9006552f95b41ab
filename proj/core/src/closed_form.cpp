#include "focalpair/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace focalpair {
namespace {

// expm1(y)/y extended continuously through y = 0.
double phi(double y) { return y == 0.0 ? 1.0 : std::expm1(y) / y; }

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("t must be finite and >= 0");
  }
}

}  // namespace

InitialCondition InitialCondition::one_excited() {
  InitialCondition init;
  init.x0.rho_ss = 0.5;
  init.x0.rho_aa = 0.5;
  init.x0.rho_as = Complex(0.5, 0.0);
  return init;
}

InitialCondition InitialCondition::both_excited() {
  InitialCondition init;
  init.x0.rho_ee = 1.0;
  return init;
}

InitialCondition InitialCondition::from_state(const XState& x) {
  x.validate();
  return InitialCondition{x};
}

XState evolve_closed_form(const SystemParams& p, const InitialCondition& init,
                          double t) {
  p.validate();
  check_time(t);
  const XState& x0 = init.x0;
  const double tau = p.gamma_tau;
  const double et = std::exp(-t);

  XState x;
  x.rho_ee = x0.rho_ee * std::exp(-2.0 * t);
  x.rho_eg = x0.rho_eg * et;

  if (t <= tau) {
    // No retarded signal yet: both single-excitation levels decay at the
    // bare rate while rho_ee feeds them symmetrically.
    const double pump = -std::expm1(-t);  // 1 - e^{-t}
    x.rho_ss = (x0.rho_ss + x0.rho_ee * pump) * et;
    x.rho_aa = (x0.rho_aa + x0.rho_ee * pump) * et;
    x.rho_as = x0.rho_as * et;
  } else {
    const double c = p.kappa * std::cos(p.phase);
    const double s = p.kappa * std::sin(p.phase);
    const double dt = t - tau;
    const double tau_pump = -std::expm1(-tau);  // 1 - e^{-tau}
    // Feeding of the symmetric/antisymmetric levels by the doubly excited
    // population. (1+c)*dt*phi((1-c)*dt) is the stable rewrite of
    // (1+c)/(1-c) * (e^{-(tau + c*dt)} - e^{-t}) * e^{t}.
    const double feed_s = (1.0 + c) * dt * phi((1.0 - c) * dt) * et * et +
                          tau_pump * std::exp(-(t + c * dt));
    const double feed_a = (1.0 - c) * dt * phi((1.0 + c) * dt) * et * et +
                          tau_pump * std::exp(-(t - c * dt));
    x.rho_ss = x0.rho_ss * std::exp(-(t + c * dt)) + x0.rho_ee * feed_s;
    x.rho_aa = x0.rho_aa * std::exp(-(t - c * dt)) + x0.rho_ee * feed_a;
    x.rho_as = x0.rho_as * (et * std::polar(1.0, -s * dt));
  }

  x.rho_gg = x0.trace() - x.rho_ee - x.rho_ss - x.rho_aa;
  return x;
}

XState one_excited_solution(const SystemParams& p, double t) {
  p.validate();
  check_time(t);
  const double et = std::exp(-t);
  XState x;
  if (t <= p.gamma_tau) {
    x.rho_ss = 0.5 * et;
    x.rho_aa = 0.5 * et;
    x.rho_as = Complex(0.5 * et, 0.0);
  } else {
    const double c = p.kappa * std::cos(p.phase);
    const double s = p.kappa * std::sin(p.phase);
    const double dt = t - p.gamma_tau;
    x.rho_ss = 0.5 * std::exp(-(t + c * dt));
    x.rho_aa = 0.5 * std::exp(-(t - c * dt));
    x.rho_as = 0.5 * et * std::polar(1.0, -s * dt);
  }
  x.rho_gg = 1.0 - x.rho_ss - x.rho_aa;
  return x;
}

XState both_excited_solution(const SystemParams& p, double t) {
  return evolve_closed_form(p, InitialCondition::both_excited(), t);
}

}  // namespace focalpair
