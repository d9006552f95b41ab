#pragma once

#include <functional>
#include <vector>

#include "focalpair/trajectory.hpp"

namespace focalpair {

/// Sudden birth/death record of the concurrence over a scanned window.
/// Times interleave: every death is preceded by a birth, every rebirth
/// follows a death.
struct EntanglementEvents {
  std::vector<double> birth_times;
  std::vector<double> death_times;
  double peak_time = 0.0;
  double peak_value = 0.0;
};

struct EventOptions {
  /// Concurrence at or below this value counts as zero.
  double zero_tol = 1e-9;
  /// A dip of the sampled curve that only the continuous refinement can see
  /// (the curve touches zero between two positive lobes) is reported as a
  /// death/rebirth pair only when both lobes rise above this floor;
  /// otherwise the feature is below resolution and suppressed. Interval
  /// deaths, where the samples themselves sink to zero, are always reported.
  double revival_floor = 1e-3;
  /// Continuous-time concurrence, used to refine crossings by bisection and
  /// extrema by golden-section search. When absent, crossings fall back to
  /// linear interpolation between samples and no dip refinement happens.
  std::function<double(double)> continuous;
};

/// Scans a sampled concurrence curve (uniform grid, step <= 1e-2, filled
/// concurrence column) for zero crossings and the global peak. Crossing
/// refinement reaches |dt| <= 1e-6.
EntanglementEvents detect_events(const Trajectory& curve,
                                 const EventOptions& opts);
EntanglementEvents detect_events(const Trajectory& curve,
                                 double zero_tol = 1e-9);

}  // namespace focalpair
