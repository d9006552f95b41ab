#pragma once

#include <optional>
#include <vector>

#include "focalpair/states.hpp"

namespace focalpair {

/// Time-ordered record of the pair state. The concurrence column is filled
/// by the entanglement layer (attach_concurrence) and may be empty for raw
/// integrator output.
struct Trajectory {
  std::vector<double> times;
  std::vector<XState> states;
  std::vector<double> concurrence;
  /// Max elementwise deviation against the independent numeric integrator,
  /// when a scenario run attached one.
  std::optional<double> oracle_residual;
  /// Integrator diagnostics: worst trace drift seen across all substeps, and
  /// (bare-basis runs only) the worst leakage outside the X pattern.
  std::optional<double> max_trace_drift;
  std::optional<double> max_x_leakage;

  std::size_t size() const { return times.size(); }
};

}  // namespace focalpair
