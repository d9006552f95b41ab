// Command-line front end: evolve / figure / events / kappa.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "focalpair/closed_form.hpp"
#include "focalpair/concurrence.hpp"
#include "focalpair/events.hpp"
#include "focalpair/geometry.hpp"
#include "focalpair/integrator.hpp"
#include "focalpair/io.hpp"
#include "focalpair/scenarios.hpp"

namespace fp = focalpair;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double kappa = 0.0;
  double phase = 0.0;
  double gamma_tau = 0.0;
  std::string initial = "one";
  double t_max = 10.0;
  double dt = 0.01;
  std::string method = "closed";
  std::string out = "-";
};

// Flags are collected as strings so that angle options accept pi literals
// and so we can tell "explicitly set" apart from default.
struct RunFlags {
  std::string config_path;
  std::string kappa, phase, gamma_tau, initial, t_max, dt, method, out;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_kappa = nullptr;
  CLI::Option* o_phase = nullptr;
  CLI::Option* o_gamma_tau = nullptr;
  CLI::Option* o_initial = nullptr;
  CLI::Option* o_t_max = nullptr;
  CLI::Option* o_dt = nullptr;
  CLI::Option* o_method = nullptr;
  CLI::Option* o_out = nullptr;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool with_method) {
  f.o_config =
      cmd->add_option("--config", f.config_path, "JSON run configuration");
  f.o_kappa = cmd->add_option("--kappa", f.kappa,
                              "collection efficiency, in [0, 1]");
  f.o_phase = cmd->add_option(
      "--phase", f.phase, "propagation phase; accepts pi literals like pi/2");
  f.o_gamma_tau = cmd->add_option("--gamma-tau", f.gamma_tau,
                                  "retardation time in decay units");
  f.o_initial = cmd->add_option("--initial", f.initial,
                                "one | both | custom:<json>");
  f.o_t_max = cmd->add_option("--t-max", f.t_max, "end of the time window");
  f.o_dt = cmd->add_option("--dt", f.dt, "sample step");
  if (with_method) {
    f.o_method = cmd->add_option("--method", f.method,
                                 "closed | rk4 | both (adds residual column)");
  }
  f.o_out = cmd->add_option("--out", f.out, "output file, or - for stdout");
}

double parse_number(const std::string& text, const char* what) {
  try {
    return fp::parse_angle(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(std::string("bad value for ") + what + ": '" + text +
                      "'");
  }
}

double json_angle(const json& v, const char* key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_number(v.get<std::string>(), key);
  throw usage_error(std::string("config key '") + key +
                    "' must be a number or angle string");
}

RunConfig assemble(const RunFlags& f) {
  RunConfig rc;
  if (f.o_config->count() > 0) {
    std::ifstream in(f.config_path);
    if (!in) throw usage_error("cannot read config: " + f.config_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw usage_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw usage_error("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "kappa") {
        rc.kappa = value.get<double>();
      } else if (key == "phase") {
        rc.phase = json_angle(value, "phase");
      } else if (key == "gamma_tau") {
        rc.gamma_tau = json_angle(value, "gamma_tau");
      } else if (key == "initial") {
        rc.initial = value.get<std::string>();
      } else if (key == "t_max") {
        rc.t_max = value.get<double>();
      } else if (key == "dt") {
        rc.dt = value.get<double>();
      } else if (key == "method") {
        rc.method = value.get<std::string>();
      } else if (key == "out") {
        rc.out = value.get<std::string>();
      } else {
        throw usage_error("unknown config key: '" + key + "'");
      }
    }
  }
  if (f.o_kappa->count()) rc.kappa = parse_number(f.kappa, "--kappa");
  if (f.o_phase->count()) rc.phase = parse_number(f.phase, "--phase");
  if (f.o_gamma_tau->count()) {
    rc.gamma_tau = parse_number(f.gamma_tau, "--gamma-tau");
  }
  if (f.o_initial->count()) rc.initial = f.initial;
  if (f.o_t_max->count()) rc.t_max = parse_number(f.t_max, "--t-max");
  if (f.o_dt->count()) rc.dt = parse_number(f.dt, "--dt");
  if (f.o_method && f.o_method->count()) rc.method = f.method;
  if (f.o_out->count()) rc.out = f.out;
  return rc;
}

fp::Complex json_complex(const json& v, const std::string& key) {
  if (v.is_number()) return fp::Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return fp::Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw usage_error("state entry '" + key +
                    "' must be a number or [re, im] pair");
}

fp::InitialCondition make_initial(const std::string& request) {
  if (request == "one") return fp::InitialCondition::one_excited();
  if (request == "both") return fp::InitialCondition::both_excited();
  const std::string prefix = "custom:";
  if (request.rfind(prefix, 0) != 0) {
    throw usage_error("--initial must be one, both or custom:<json>");
  }
  json j;
  try {
    j = json::parse(request.substr(prefix.size()));
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("custom state is not valid JSON: ") +
                      e.what());
  }
  if (!j.is_object()) throw usage_error("custom state must be a JSON object");
  fp::XState x;
  for (const auto& [key, value] : j.items()) {
    if (key == "rho_gg") {
      x.rho_gg = value.get<double>();
    } else if (key == "rho_ee") {
      x.rho_ee = value.get<double>();
    } else if (key == "rho_ss") {
      x.rho_ss = value.get<double>();
    } else if (key == "rho_aa") {
      x.rho_aa = value.get<double>();
    } else if (key == "rho_as") {
      x.rho_as = json_complex(value, key);
    } else if (key == "rho_eg") {
      x.rho_eg = json_complex(value, key);
    } else {
      throw usage_error("unknown state key: '" + key + "'");
    }
  }
  try {
    return fp::InitialCondition::from_state(x);
  } catch (const std::domain_error& e) {
    throw usage_error(std::string("custom state rejected: ") + e.what());
  }
}

// Output sink: stdout for "-", a file otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw usage_error("cannot write to: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

fp::SystemParams checked_params(const RunConfig& rc) {
  fp::SystemParams p{rc.kappa, rc.phase, rc.gamma_tau};
  try {
    p.validate();
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  }
  if (!(rc.t_max > 0.0)) throw usage_error("t_max must be > 0");
  if (!(rc.dt > 0.0)) throw usage_error("dt must be > 0");
  return p;
}

fp::Trajectory closed_trajectory(const fp::SystemParams& p,
                                 const fp::InitialCondition& init,
                                 const std::vector<double>& times) {
  fp::Trajectory tr;
  tr.times = times;
  tr.states.reserve(times.size());
  for (double t : times) {
    tr.states.push_back(fp::evolve_closed_form(p, init, t));
  }
  fp::attach_concurrence(tr);
  return tr;
}

fp::Trajectory rk4_trajectory(const fp::SystemParams& p,
                              const fp::InitialCondition& init,
                              const RunConfig& rc,
                              const std::vector<double>& times) {
  fp::IntegratorConfig cfg;
  cfg.step = std::min(1e-3, rc.dt);
  cfg.t_max = rc.t_max;
  fp::Trajectory tr =
      fp::integrate_at(p, init, cfg, fp::Basis::collective, times);
  fp::attach_concurrence(tr);
  return tr;
}

int run_evolve(const RunConfig& rc) {
  const fp::SystemParams p = checked_params(rc);
  const fp::InitialCondition init = make_initial(rc.initial);
  const std::vector<double> times = fp::sample_grid(rc.t_max, rc.dt);
  Sink sink(rc.out);
  if (rc.method == "closed") {
    fp::write_state_csv(sink.stream(), closed_trajectory(p, init, times));
  } else if (rc.method == "rk4") {
    fp::write_state_csv(sink.stream(), rk4_trajectory(p, init, rc, times));
  } else if (rc.method == "both") {
    const fp::Trajectory closed = closed_trajectory(p, init, times);
    const fp::Trajectory numeric = rk4_trajectory(p, init, rc, times);
    std::vector<double> residuals(closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      const fp::XState& a = closed.states[i];
      const fp::XState& b = numeric.states[i];
      double r = std::abs(a.rho_ee - b.rho_ee);
      r = std::max(r, std::abs(a.rho_ss - b.rho_ss));
      r = std::max(r, std::abs(a.rho_aa - b.rho_aa));
      r = std::max(r, std::abs(a.rho_gg - b.rho_gg));
      r = std::max(r, std::abs(a.rho_as - b.rho_as));
      r = std::max(r, std::abs(a.rho_eg - b.rho_eg));
      residuals[i] = r;
    }
    fp::write_state_csv(sink.stream(), closed, residuals);
  } else {
    throw usage_error("--method must be closed, rk4 or both");
  }
  return 0;
}

int run_events(const RunConfig& rc, double zero_tol) {
  if (rc.dt > 1e-2 + 1e-12) {
    throw usage_error("events needs dt <= 0.01 for a reliable scan");
  }
  const fp::SystemParams p = checked_params(rc);
  const fp::InitialCondition init = make_initial(rc.initial);
  const fp::Trajectory tr =
      closed_trajectory(p, init, fp::sample_grid(rc.t_max, rc.dt));
  fp::EventOptions opts;
  opts.zero_tol = zero_tol;
  opts.continuous = [&p, &init](double t) {
    return fp::concurrence_x(fp::evolve_closed_form(p, init, t));
  };
  const fp::EntanglementEvents ev = fp::detect_events(tr, opts);

  const auto r6 = [](double v) { return std::round(v * 1e6) / 1e6; };
  ordered_json out;
  out["births"] = json::array();
  for (double t : ev.birth_times) out["births"].push_back(r6(t));
  out["deaths"] = json::array();
  for (double t : ev.death_times) out["deaths"].push_back(r6(t));
  out["peak"] = {{"t", r6(ev.peak_time)}, {"c", r6(ev.peak_value)}};
  Sink sink(rc.out);
  sink.stream() << out.dump(2) << '\n';
  return 0;
}

int run_figure(int number, const std::string& out_dir) {
  const fp::FigurePreset* preset = nullptr;
  try {
    preset = &fp::figure_preset(number);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw usage_error("cannot create directory: " + out_dir);
  const std::string stem = "fig" + std::to_string(number) + "_";
  for (const fp::Scenario& curve : preset->curves) {
    const fp::Trajectory tr = fp::run_scenario(curve, preset->dt_sample, true);
    const std::filesystem::path path = dir / (stem + curve.name + ".csv");
    std::ofstream os(path);
    if (!os) throw usage_error("cannot write to: " + path.string());
    fp::write_scenario_csv(os, tr, curve.outputs);
    std::cout << path.string() << '\n';
  }
  if (preset->sweep) {
    const fp::SweepTable table = fp::run_sweep(*preset->sweep);
    const std::filesystem::path path = dir / (stem + "surface.csv");
    std::ofstream os(path);
    if (!os) throw usage_error("cannot write to: " + path.string());
    fp::write_sweep_csv(os, table);
    std::cout << path.string() << '\n';
  }
  return 0;
}

int run_kappa(const std::string& half_angle, const std::string& tilt) {
  const double alpha = parse_number(half_angle, "--half-angle");
  const double beta = parse_number(tilt, "--tilt");
  double k = 0.0;
  try {
    k = fp::kappa_from_cone(alpha, beta);
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  }
  std::printf("%.12g\n", k);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two distant atoms coupled through a collection optic"};
  app.require_subcommand(1);

  auto* evolve = app.add_subcommand(
      "evolve", "sample the pair state and concurrence over time (CSV)");
  RunFlags evolve_flags;
  add_run_flags(evolve, evolve_flags, true);

  auto* figure = app.add_subcommand(
      "figure", "write the preset curve families as CSV files");
  int figure_number = 0;
  std::string figure_dir = ".";
  figure->add_option("number", figure_number, "preset number, 2 through 7")
      ->required();
  figure->add_option("--out", figure_dir, "output directory");

  auto* events = app.add_subcommand(
      "events", "report birth/death times and the peak as JSON");
  RunFlags event_flags;
  add_run_flags(events, event_flags, false);
  double zero_tol = 1e-9;
  events->add_option("--zero-tol", zero_tol,
                     "concurrence at or below this counts as zero");

  auto* kappa = app.add_subcommand(
      "kappa", "collection efficiency of a circular aperture");
  std::string half_angle;
  std::string tilt = "0";
  kappa->add_option("--half-angle", half_angle, "cone half-angle, [0, pi]")
      ->required();
  kappa->add_option("--tilt", tilt, "axis tilt from the pair axis, [0, pi/2]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (evolve->parsed()) return run_evolve(assemble(evolve_flags));
    if (figure->parsed()) return run_figure(figure_number, figure_dir);
    if (events->parsed()) return run_events(assemble(event_flags), zero_tol);
    if (kappa->parsed()) return run_kappa(half_angle, tilt);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fp::integration_error& e) {
    std::cerr << "integration failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
