#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalpair/params.hpp"
#include "focalpair/trajectory.hpp"

namespace focalpair {

enum class InitialKind { one_excited, both_excited };

/// Columns a scenario exports beyond the time grid.
enum class Observable { concurrence, rho_ee, rho_ss, rho_aa, rho_as };

struct Scenario {
  std::string name;
  InitialKind initial = InitialKind::one_excited;
  SystemParams params;
  double t_max = 10.0;
  std::vector<Observable> outputs{Observable::concurrence};
};

/// Uniform grid 0, dt, 2 dt, ... up to t_max (t_max itself included when it
/// is a multiple of dt to within 1e-9).
std::vector<double> sample_grid(double t_max, double dt);

/// Samples the closed-form solution and its concurrence on the uniform grid
/// 0, dt, 2 dt, ..., t_max. When with_residual is set, the trajectory also
/// carries the max elementwise deviation from an independent collective-basis
/// RK4 run over the same grid.
Trajectory run_scenario(const Scenario& s, double dt_sample = 0.01,
                        bool with_residual = true);

struct SweepAxis {
  std::string name;  ///< "kappa", "phase" or "gamma_tau"
  std::vector<double> values;
};

/// Product grid of one or two parameter axes against the time grid of a base
/// scenario.
struct SweepGrid {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  Scenario base;
  double dt_sample = 0.01;
};

/// Long-form table: one row per (axis value..., t), axis-major then time.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

SweepTable run_sweep(const SweepGrid& g);

/// A preset reproducing one published figure: either a family of curves or a
/// parameter sweep.
struct FigurePreset {
  int number = 0;
  double dt_sample = 0.01;
  std::vector<Scenario> curves;
  std::optional<SweepGrid> sweep;
};

/// Presets for figures 2 through 7.
const std::vector<FigurePreset>& figure_presets();
const FigurePreset& figure_preset(int number);

}  // namespace focalpair
