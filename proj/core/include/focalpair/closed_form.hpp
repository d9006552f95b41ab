#pragma once

#include "focalpair/params.hpp"
#include "focalpair/states.hpp"

namespace focalpair {

/// Initial condition of the pair, expressed in the collective basis.
struct InitialCondition {
  XState x0;

  /// One shared excitation (atom 1 excited):
  /// rho_ss = rho_aa = rho_as = 1/2.
  static InitialCondition one_excited();
  /// Both atoms excited: rho_ee = 1.
  static InitialCondition both_excited();
  static InitialCondition from_state(const XState& x);
};

/// Exact solution of the delayed-coupling master equation at time t >= 0
/// for an arbitrary X-form initial condition.
///
/// For t <= gamma_tau every level decays independently; afterwards the
/// symmetric and antisymmetric channels pick up rates 1 +- kappa*cos(phase)
/// and the as-coherence rotates at kappa*sin(phase). The pump of the
/// single-excitation levels by rho_ee is evaluated through
/// expm1(y)/y, which removes the spurious singularities of the textbook
/// prefactor (1+-c)/(1-+c) at kappa*cos(phase) = -+1 and reduces to the
/// analytic limit 2*(t - tau)*e^{-t} there.
XState evolve_closed_form(const SystemParams& p, const InitialCondition& init,
                          double t);

/// Specialised solution for the one-excited initial condition.
XState one_excited_solution(const SystemParams& p, double t);

/// Specialised solution for the both-excited initial condition.
XState both_excited_solution(const SystemParams& p, double t);

}  // namespace focalpair
