#include "focalpair/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace focalpair {
namespace {

using Eigen::Matrix4cd;

Matrix4cd make_sm1() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 2) = 1.0;  // |e1 g2> -> |g1 g2>
  m(1, 3) = 1.0;  // |e1 e2> -> |g1 e2>
  return m;
}

Matrix4cd make_sm2() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 1) = 1.0;  // |g1 e2> -> |g1 g2>
  m(2, 3) = 1.0;  // |e1 e2> -> |e1 g2>
  return m;
}

const Matrix4cd kSm1 = make_sm1();
const Matrix4cd kSp1 = make_sm1().adjoint();
const Matrix4cd kSm2 = make_sm2();
const Matrix4cd kSp2 = make_sm2().adjoint();
const Matrix4cd kP1 = kSp1 * kSm1;    // atom 1 excited-state projector
const Matrix4cd kP2 = kSp2 * kSm2;    // atom 2 excited-state projector
const Matrix4cd kK12 = kSp1 * kSm2;   // excitation hop 2 -> 1
const Matrix4cd kK21 = kSp2 * kSm1;   // excitation hop 1 -> 2
const Matrix4cd kHop = kK12 + kK21;

Matrix4cd bare_rhs(const CollectiveRates& r, const Matrix4cd& rho) {
  Matrix4cd d = Matrix4cd::Zero();
  // independent decay, unit rate per atom
  d -= 0.5 * (rho * kP1 + kP1 * rho);
  d += kSm1 * rho * kSp1;
  d -= 0.5 * (rho * kP2 + kP2 * rho);
  d += kSm2 * rho * kSp2;
  if (r.gamma_12 != 0.0) {
    d -= 0.5 * r.gamma_12 * (rho * kK12 + kK12 * rho - 2.0 * kSm1 * rho * kSp2);
    d -= 0.5 * r.gamma_12 * (rho * kK21 + kK21 * rho - 2.0 * kSm2 * rho * kSp1);
  }
  if (r.omega_12 != 0.0) {
    // Sign chosen so the as-coherence rotates as e^{-2 i omega_12 t},
    // matching the collective-basis generator below.
    d += Complex(0.0, r.omega_12) * (kHop * rho - rho * kHop);
  }
  return d;
}

XState coll_rhs(const CollectiveRates& r, const XState& x) {
  XState d;
  d.rho_ee = -2.0 * x.rho_ee;
  d.rho_eg = -x.rho_eg;
  d.rho_ss = -(1.0 + r.gamma_12) * (x.rho_ss - x.rho_ee);
  d.rho_aa = -(1.0 - r.gamma_12) * (x.rho_aa - x.rho_ee);
  d.rho_as = -Complex(1.0, 2.0 * r.omega_12) * x.rho_as;
  d.rho_gg = -(d.rho_ee + d.rho_ss + d.rho_aa);
  return d;
}

Matrix4cd add_scaled(const Matrix4cd& a, double h, const Matrix4cd& b) {
  return a + h * b;
}

XState add_scaled(const XState& a, double h, const XState& b) {
  XState r;
  r.rho_gg = a.rho_gg + h * b.rho_gg;
  r.rho_ee = a.rho_ee + h * b.rho_ee;
  r.rho_ss = a.rho_ss + h * b.rho_ss;
  r.rho_aa = a.rho_aa + h * b.rho_aa;
  r.rho_as = a.rho_as + h * b.rho_as;
  r.rho_eg = a.rho_eg + h * b.rho_eg;
  return r;
}

template <class State, class Rhs>
State rk4_step(const State& y, double h, const Rhs& f) {
  const State k1 = f(y);
  const State k2 = f(add_scaled(y, 0.5 * h, k1));
  const State k3 = f(add_scaled(y, 0.5 * h, k2));
  const State k4 = f(add_scaled(y, h, k3));
  State out = add_scaled(y, h / 6.0, k1);
  out = add_scaled(out, h / 3.0, k2);
  out = add_scaled(out, h / 3.0, k3);
  out = add_scaled(out, h / 6.0, k4);
  return out;
}

constexpr double kDriftTol = 1e-8;
constexpr double kLeakTol = 1e-10;

// Mutable integration state for one basis, with the consistency checks the
// stepper applies after every substep.
struct CollectiveWalker {
  XState y;
  double max_drift = 0.0;

  explicit CollectiveWalker(const XState& x0) : y(x0) {}

  void step(double h, const CollectiveRates& r) {
    y = rk4_step(y, h, [&r](const XState& s) { return coll_rhs(r, s); });
    const double drift = std::abs(y.trace() - 1.0);
    max_drift = std::max(max_drift, drift);
    if (drift > kDriftTol) {
      throw integration_error("trace drifted beyond tolerance");
    }
  }

  XState record() const { return y; }
  double max_leak() const { return 0.0; }
};

struct BareWalker {
  Matrix4cd y;
  double max_drift = 0.0;
  double max_leakage = 0.0;

  explicit BareWalker(const XState& x0) : y(collective_to_bare(x0).rho) {}

  void step(double h, const CollectiveRates& r) {
    y = rk4_step(y, h, [&r](const Matrix4cd& s) { return bare_rhs(r, s); });
    TwoQubitState s{y};
    const double drift = std::abs(s.trace_real() - 1.0);
    max_drift = std::max(max_drift, drift);
    if (drift > kDriftTol || s.hermiticity_defect() > kDriftTol) {
      throw integration_error("trace or Hermiticity drifted beyond tolerance");
    }
    const double leak = s.x_leakage();
    max_leakage = std::max(max_leakage, leak);
    if (leak > kLeakTol) {
      throw integration_error("state leaked out of the X pattern");
    }
  }

  XState record() const { return bare_to_collective(TwoQubitState{y}, 1.0); }
  double max_leak() const { return max_leakage; }
};

struct Segment {
  double t0, t1;
  CollectiveRates rates;
};

// The delay splits [0, t_max] into an uncoupled and a coupled part. The
// boundary point itself still belongs to the uncoupled flow; every step
// starting at t = gamma_tau already uses the post-jump rates.
std::vector<Segment> make_segments(const SystemParams& p, double t_max) {
  const CollectiveRates post{p.kappa * std::cos(p.phase),
                             0.5 * p.kappa * std::sin(p.phase)};
  if (p.gamma_tau <= 0.0) {
    return {{0.0, t_max, post}};
  }
  if (p.gamma_tau >= t_max) {
    return {{0.0, t_max, CollectiveRates{}}};
  }
  return {{0.0, p.gamma_tau, CollectiveRates{}}, {p.gamma_tau, t_max, post}};
}

void check_inputs(const SystemParams& p, const InitialCondition& init,
                  const IntegratorConfig& cfg) {
  p.validate();
  cfg.validate();
  init.x0.validate();
}

template <class Walker>
Trajectory run_grid(const SystemParams& p, const InitialCondition& init,
                    const IntegratorConfig& cfg) {
  Trajectory tr;
  Walker w(init.x0);
  tr.times.push_back(0.0);
  tr.states.push_back(w.record());
  for (const Segment& seg : make_segments(p, cfg.t_max)) {
    const double len = seg.t1 - seg.t0;
    if (len <= 0.0) continue;
    const auto n = static_cast<std::size_t>(std::ceil(len / cfg.step - 1e-9));
    const double h = len / static_cast<double>(std::max<std::size_t>(n, 1));
    for (std::size_t i = 1; i <= std::max<std::size_t>(n, 1); ++i) {
      w.step(h, seg.rates);
      tr.times.push_back(i == n ? seg.t1 : seg.t0 + static_cast<double>(i) * h);
      tr.states.push_back(w.record());
    }
  }
  tr.max_trace_drift = w.max_drift;
  tr.max_x_leakage = w.max_leak();
  return tr;
}

template <class Walker>
Trajectory run_sampled(const SystemParams& p, const InitialCondition& init,
                       const IntegratorConfig& cfg,
                       std::span<const double> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i] >= 0.0) || samples[i] > cfg.t_max + 1e-9 ||
        (i > 0 && samples[i] < samples[i - 1])) {
      throw std::domain_error("sample times must be sorted within [0, t_max]");
    }
  }
  Trajectory tr;
  Walker w(init.x0);
  double t_cur = 0.0;
  const double tau = p.gamma_tau;
  auto advance_plain = [&](double t_to) {
    // never crosses the rate jump
    const double len = t_to - t_cur;
    if (len <= 0.0) return;
    const CollectiveRates r =
        t_cur >= tau ? collective_rates(p, tau + 1.0)  // post-jump values
                     : CollectiveRates{};
    const auto n =
        std::max<std::size_t>(1, static_cast<std::size_t>(
                                     std::ceil(len / cfg.step - 1e-9)));
    const double h = len / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) w.step(h, r);
    t_cur = t_to;
  };
  for (double t_s : samples) {
    if (t_cur < tau && t_s > tau) {
      advance_plain(tau);
    }
    advance_plain(t_s);
    tr.times.push_back(t_s);
    tr.states.push_back(w.record());
  }
  tr.max_trace_drift = w.max_drift;
  tr.max_x_leakage = w.max_leak();
  return tr;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(step > 0.0 && step <= 1e-2)) {
    throw std::domain_error("step must lie in (0, 1e-2]");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::domain_error("t_max must be finite and > 0");
  }
  if (method != StepMethod::fixed_rk4) {
    throw std::domain_error("unknown step method");
  }
}

Eigen::Matrix4cd lindblad_rhs_bare(const SystemParams& p, double t,
                                   const Eigen::Matrix4cd& rho) {
  return bare_rhs(collective_rates(p, t), rho);
}

XState collective_rhs(const SystemParams& p, double t, const XState& x) {
  return coll_rhs(collective_rates(p, t), x);
}

Trajectory integrate(const SystemParams& p, const InitialCondition& init,
                     const IntegratorConfig& cfg, Basis basis) {
  check_inputs(p, init, cfg);
  return basis == Basis::bare ? run_grid<BareWalker>(p, init, cfg)
                              : run_grid<CollectiveWalker>(p, init, cfg);
}

Trajectory integrate_at(const SystemParams& p, const InitialCondition& init,
                        const IntegratorConfig& cfg, Basis basis,
                        std::span<const double> sample_times) {
  check_inputs(p, init, cfg);
  return basis == Basis::bare
             ? run_sampled<BareWalker>(p, init, cfg, sample_times)
             : run_sampled<CollectiveWalker>(p, init, cfg, sample_times);
}

}  // namespace focalpair
