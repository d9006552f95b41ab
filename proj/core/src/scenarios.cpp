#include "focalpair/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "focalpair/closed_form.hpp"
#include "focalpair/concurrence.hpp"
#include "focalpair/integrator.hpp"

namespace focalpair {
namespace {

constexpr double kPi = 3.14159265358979323846;

InitialCondition make_initial(InitialKind kind) {
  return kind == InitialKind::one_excited ? InitialCondition::one_excited()
                                          : InitialCondition::both_excited();
}

double state_distance(const XState& a, const XState& b) {
  double d = std::abs(a.rho_gg - b.rho_gg);
  d = std::max(d, std::abs(a.rho_ee - b.rho_ee));
  d = std::max(d, std::abs(a.rho_ss - b.rho_ss));
  d = std::max(d, std::abs(a.rho_aa - b.rho_aa));
  d = std::max(d, std::abs(a.rho_as.real() - b.rho_as.real()));
  d = std::max(d, std::abs(a.rho_as.imag() - b.rho_as.imag()));
  d = std::max(d, std::abs(a.rho_eg.real() - b.rho_eg.real()));
  d = std::max(d, std::abs(a.rho_eg.imag() - b.rho_eg.imag()));
  return d;
}

void set_param(SystemParams& p, const std::string& name, double value) {
  if (name == "kappa") {
    p.kappa = value;
  } else if (name == "phase") {
    p.phase = value;
  } else if (name == "gamma_tau") {
    p.gamma_tau = value;
  } else {
    throw std::invalid_argument("unknown sweep axis: " + name);
  }
}

std::string kappa_label(double kappa) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "kappa%.1f", kappa);
  return buf;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

std::vector<FigurePreset> build_presets() {
  const double tau = 0.4;
  std::vector<FigurePreset> all;

  // transient regime, quarter-period phase: a family of collection
  // efficiencies showing where death/revival switches on
  {
    FigurePreset f;
    f.number = 2;
    for (double k : {0.4, 0.6, 0.8, 1.0}) {
      f.curves.push_back({kappa_label(k),
                          InitialKind::one_excited,
                          {k, 0.5 * kPi, tau},
                          6.0,
                          {Observable::concurrence}});
    }
    all.push_back(std::move(f));
  }
  // full-period phase: purely dark/bright splitting, no oscillation
  {
    FigurePreset f;
    f.number = 3;
    for (double k : {0.4, 0.6, 0.8, 1.0}) {
      f.curves.push_back({kappa_label(k),
                          InitialKind::one_excited,
                          {k, 2.0 * kPi, tau},
                          10.0,
                          {Observable::concurrence}});
    }
    all.push_back(std::move(f));
  }
  // concurrence against the slow-mode population it tracks
  {
    FigurePreset f;
    f.number = 4;
    f.curves.push_back({kappa_label(0.5),
                        InitialKind::one_excited,
                        {0.5, 2.0 * kPi, tau},
                        10.0,
                        {Observable::concurrence, Observable::rho_aa}});
    all.push_back(std::move(f));
  }
  // phase sweep surface, one excitation
  {
    FigurePreset f;
    f.number = 5;
    f.dt_sample = 0.01;
    SweepGrid g;
    g.axis1 = {"phase", linspace(0.0, 4.0 * kPi, 81)};
    g.base = {"phase_sweep",
              InitialKind::one_excited,
              {0.5, 0.0, tau},
              6.0,
              {Observable::concurrence}};
    g.dt_sample = 0.01;
    f.sweep = std::move(g);
    all.push_back(std::move(f));
  }
  // delayed birth from the fully excited pair
  {
    FigurePreset f;
    f.number = 6;
    f.curves.push_back({kappa_label(0.5),
                        InitialKind::both_excited,
                        {0.5, 2.0 * kPi, tau},
                        10.0,
                        {Observable::concurrence, Observable::rho_ee,
                         Observable::rho_aa}});
    all.push_back(std::move(f));
  }
  // phase sweep surface, both excited
  {
    FigurePreset f;
    f.number = 7;
    f.dt_sample = 0.01;
    SweepGrid g;
    g.axis1 = {"phase", linspace(0.0, 4.0 * kPi, 81)};
    g.base = {"phase_sweep",
              InitialKind::both_excited,
              {0.5, 0.0, tau},
              10.0,
              {Observable::concurrence}};
    g.dt_sample = 0.01;
    f.sweep = std::move(g);
    all.push_back(std::move(f));
  }
  return all;
}

}  // namespace

std::vector<double> sample_grid(double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max > 0.0)) {
    throw std::domain_error("grid needs dt > 0 and t_max > 0");
  }
  const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  // For a decimal step, i/scale is correctly rounded where i*dt can pick up
  // an extra ulp; keeps grid times at their shortest representation.
  const double inv = 1.0 / dt;
  const double scale = std::round(inv);
  const bool nice = scale > 0.0 && std::abs(inv - scale) < 1e-9 * scale;
  std::vector<double> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    v[i] = nice ? static_cast<double>(i) / scale : static_cast<double>(i) * dt;
  }
  return v;
}

Trajectory run_scenario(const Scenario& s, double dt_sample,
                        bool with_residual) {
  s.params.validate();
  if (!(dt_sample > 0.0 && dt_sample <= 1e-2 + 1e-12)) {
    throw std::domain_error("dt_sample must lie in (0, 1e-2]");
  }
  if (!(s.t_max > 0.0)) throw std::domain_error("t_max must be > 0");
  const InitialCondition init = make_initial(s.initial);
  Trajectory tr;
  tr.times = sample_grid(s.t_max, dt_sample);
  tr.states.reserve(tr.times.size());
  for (double t : tr.times) {
    tr.states.push_back(evolve_closed_form(s.params, init, t));
  }
  attach_concurrence(tr);
  if (with_residual) {
    IntegratorConfig cfg;
    cfg.step = 1e-3;
    cfg.t_max = s.t_max;
    const Trajectory num =
        integrate_at(s.params, init, cfg, Basis::collective, tr.times);
    double r = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
      r = std::max(r, state_distance(tr.states[i], num.states[i]));
    }
    tr.oracle_residual = r;
  }
  return tr;
}

SweepTable run_sweep(const SweepGrid& g) {
  if (g.axis1.values.empty()) {
    throw std::domain_error("sweep axis needs at least one value");
  }
  if (g.axis2 && g.axis2->values.empty()) {
    throw std::domain_error("sweep axis needs at least one value");
  }
  SweepTable table;
  table.columns.push_back(g.axis1.name);
  if (g.axis2) table.columns.push_back(g.axis2->name);
  table.columns.push_back("t");
  table.columns.push_back("concurrence");

  const std::vector<double> inner =
      g.axis2 ? g.axis2->values : std::vector<double>{0.0};
  for (double v1 : g.axis1.values) {
    for (double v2 : inner) {
      Scenario sc = g.base;
      set_param(sc.params, g.axis1.name, v1);
      if (g.axis2) set_param(sc.params, g.axis2->name, v2);
      const Trajectory tr = run_scenario(sc, g.dt_sample, false);
      for (std::size_t i = 0; i < tr.size(); ++i) {
        std::vector<double> row;
        row.reserve(table.columns.size());
        row.push_back(v1);
        if (g.axis2) row.push_back(v2);
        row.push_back(tr.times[i]);
        row.push_back(tr.concurrence[i]);
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = build_presets();
  return presets;
}

const FigurePreset& figure_preset(int number) {
  for (const FigurePreset& f : figure_presets()) {
    if (f.number == number) return f;
  }
  throw std::invalid_argument("no preset for figure " + std::to_string(number));
}

}  // namespace focalpair
