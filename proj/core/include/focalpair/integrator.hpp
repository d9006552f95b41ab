#pragma once

#include <span>
#include <stdexcept>

#include "focalpair/closed_form.hpp"
#include "focalpair/params.hpp"
#include "focalpair/states.hpp"
#include "focalpair/trajectory.hpp"

namespace focalpair {

enum class Basis { bare, collective };
enum class StepMethod { fixed_rk4 };

struct IntegratorConfig {
  double step = 1e-3;  ///< RK4 step, in (0, 1e-2]
  double t_max = 10.0;
  StepMethod method = StepMethod::fixed_rk4;

  void validate() const;
};

/// Thrown when an intermediate state drifts out of tolerance
/// (trace/Hermiticity beyond 1e-8, X leakage beyond 1e-10).
class integration_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Right-hand side of the two-atom master equation in the product basis:
/// independent unit-rate decay of each atom plus the retarded cross damping
/// gamma_12(t) and coherent exchange omega_12(t). The cross-damping jump
/// term carries the index placement sigma_i^- rho sigma_j^+.
Eigen::Matrix4cd lindblad_rhs_bare(const SystemParams& p, double t,
                                   const Eigen::Matrix4cd& rho);

/// Same generator reduced to the collective X components.
XState collective_rhs(const SystemParams& p, double t, const XState& x);

/// Fixed-step RK4 over [0, t_max]. The grid is uniform with spacing <=
/// cfg.step on each side of t = gamma_tau, which is always an exact grid
/// point; the step starting at gamma_tau uses the post-jump rates (the state
/// AT gamma_tau is still the product of the uncoupled dynamics). Returns the
/// state at every grid point; concurrence is left empty.
Trajectory integrate(const SystemParams& p, const InitialCondition& init,
                     const IntegratorConfig& cfg, Basis basis);

/// Same integrator, but records the state only at the requested sample
/// times (sorted, within [0, t_max]); internal substeps never exceed
/// cfg.step and the grid still splits exactly at gamma_tau.
Trajectory integrate_at(const SystemParams& p, const InitialCondition& init,
                        const IntegratorConfig& cfg, Basis basis,
                        std::span<const double> sample_times);

}  // namespace focalpair
