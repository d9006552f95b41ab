#pragma once

#include "focalpair/params.hpp"
#include "focalpair/states.hpp"
#include "focalpair/trajectory.hpp"

namespace focalpair {

/// Wootters concurrence of an arbitrary two-qubit state via the spin-flip
/// spectrum: C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with
/// l_k the eigenvalues of rho * (sy x sy) rho^* (sy x sy) in decreasing
/// order. Eigenvalues in [-1e-10, 0) are clamped to zero; anything below
/// -1e-8 signals an invalid input state (std::domain_error).
double concurrence_general(const TwoQubitState& s);

/// Concurrence specialised to the X pattern:
///   C = max(0, C1, C2)
///   C1 = 2|rho_eg| - sqrt((rho_ss + rho_aa)^2 - (2 Re rho_as)^2)
///   C2 = sqrt((rho_ss - rho_aa)^2 + (2 Im rho_as)^2)
///        - 2 sqrt(rho_ee * rho_gg)
double concurrence_x(const XState& x);

/// Closed-form concurrence of the one-excited scenario: zero through
/// t = gamma_tau, then
///   e^{-t} * sqrt(sinh^2(c*(t - tau)) + sin^2(s*(t - tau)))
/// with c = kappa*cos(phase), s = kappa*sin(phase).
double concurrence_closed_one_excited(const SystemParams& p, double t);

/// Concurrence of the both-excited scenario. Computed through the density
/// matrix pipeline (both_excited_solution + concurrence_x), which is the
/// authoritative route; see both_excited_closed_form_audit for the
/// published single-expression variant it supersedes.
double concurrence_closed_both_excited(const SystemParams& p, double t);

/// Side-by-side audit of the both-excited concurrence. `variant` evaluates a
/// closed-form expression quoted in the literature for this scenario; it
/// does not reproduce the pipeline (its sinh term enters with the opposite
/// sign and it omits the -2*sqrt(rho_ee*rho_gg) penalty), so the pipeline
/// value is the one the library reports. residual = |pipeline - variant|.
/// Requires |kappa*cos(phase)| < 1 (the variant is singular otherwise).
struct ClosedFormAudit {
  double pipeline = 0.0;
  double variant = 0.0;
  double residual = 0.0;
};
ClosedFormAudit both_excited_closed_form_audit(const SystemParams& p, double t);

/// Fills trajectory.concurrence from its states via concurrence_x.
void attach_concurrence(Trajectory& tr);

}  // namespace focalpair
