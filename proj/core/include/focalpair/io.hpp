#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "focalpair/scenarios.hpp"
#include "focalpair/trajectory.hpp"

namespace focalpair {

/// Shortest representation that round-trips the double exactly
/// (std::to_chars). Locale independent.
std::string format_shortest(double v);

/// Fixed number of significant digits (golden-file mode).
std::string format_sig(double v, int digits);

/// Parses an angle that may use pi literals: "pi", "2pi", "pi/2", "3pi/4",
/// "-pi/3", "0.25pi", "2*pi", or a plain number. Throws
/// std::invalid_argument on anything else.
double parse_angle(const std::string& text);

/// Full state table with header
/// t,rho_ee,rho_ss,rho_aa,re_rho_as,im_rho_as,rho_gg,concurrence
/// plus a residual column when `residuals` is non-empty (one value per row).
void write_state_csv(std::ostream& os, const Trajectory& tr,
                     const std::vector<double>& residuals = {});

/// Scenario table: time plus the requested observable columns
/// (rho_as expands to re_rho_as,im_rho_as). Six significant digits when
/// golden_digits is set, shortest round-trip otherwise.
void write_scenario_csv(std::ostream& os, const Trajectory& tr,
                        const std::vector<Observable>& outputs,
                        bool golden_digits = false);

void write_sweep_csv(std::ostream& os, const SweepTable& table,
                     bool golden_digits = false);

}  // namespace focalpair
