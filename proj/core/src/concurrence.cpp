#include "focalpair/concurrence.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "focalpair/closed_form.hpp"

namespace focalpair {
namespace {

Eigen::Matrix4cd spin_flip() {
  // sigma_y x sigma_y is the antidiagonal matrix with entries -1, 1, 1, -1.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 3) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

const Eigen::Matrix4cd kFlip = spin_flip();

constexpr double kClampTol = 1e-10;
constexpr double kRejectTol = 1e-8;

}  // namespace

double concurrence_general(const TwoQubitState& s) {
  const Eigen::Matrix4cd tilde = kFlip * s.rho.conjugate() * kFlip;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(s.rho * tilde, false);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    const double re = es.eigenvalues()(i).real();
    if (re < -kRejectTol) {
      throw std::domain_error(
          "spin-flip spectrum has a negative eigenvalue; not a state");
    }
    lam[static_cast<std::size_t>(i)] = std::max(re, 0.0);
  }
  std::sort(lam.begin(), lam.end(), std::greater<>{});
  const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) -
                   std::sqrt(lam[3]);
  return std::max(0.0, c);
}

double concurrence_x(const XState& x) {
  const double sum = x.rho_ss + x.rho_aa;
  const double re2 = 2.0 * x.rho_as.real();
  const double im2 = 2.0 * x.rho_as.imag();
  const double c1 = 2.0 * std::abs(x.rho_eg) -
                    std::sqrt(std::max(0.0, sum * sum - re2 * re2));
  const double c2 = std::hypot(x.rho_ss - x.rho_aa, im2) -
                    2.0 * std::sqrt(std::max(0.0, x.rho_ee * x.rho_gg));
  return std::max({0.0, c1, c2});
}

double concurrence_closed_one_excited(const SystemParams& p, double t) {
  p.validate();
  if (!(t >= 0.0)) throw std::domain_error("t must be >= 0");
  if (t <= p.gamma_tau) return 0.0;
  const double dt = t - p.gamma_tau;
  const double c = p.kappa * std::cos(p.phase);
  const double s = p.kappa * std::sin(p.phase);
  return std::exp(-t) * std::hypot(std::sinh(c * dt), std::sin(s * dt));
}

double concurrence_closed_both_excited(const SystemParams& p, double t) {
  return concurrence_x(both_excited_solution(p, t));
}

ClosedFormAudit both_excited_closed_form_audit(const SystemParams& p,
                                               double t) {
  p.validate();
  if (!(t >= 0.0)) throw std::domain_error("t must be >= 0");
  const double c = p.kappa * std::cos(p.phase);
  if (std::abs(1.0 - std::abs(c)) < 1e-9) {
    throw std::domain_error(
        "variant expression is singular at |kappa*cos(phase)| = 1");
  }
  ClosedFormAudit audit;
  audit.pipeline = concurrence_x(both_excited_solution(p, t));
  if (t > p.gamma_tau) {
    const double tau = p.gamma_tau;
    const double dt = t - tau;
    const double bracket =
        std::exp(-tau) * ((1.0 + c) / (1.0 - c) * std::exp(-c * dt) -
                          (1.0 - c) / (1.0 + c) * std::exp(c * dt)) +
        2.0 * (-std::expm1(-tau)) * std::sinh(c * dt) -
        4.0 * c / (1.0 - c * c) * std::exp(-t);
    audit.variant = std::max(0.0, std::exp(-t) * bracket);
  }
  audit.residual = std::abs(audit.pipeline - audit.variant);
  return audit;
}

void attach_concurrence(Trajectory& tr) {
  tr.concurrence.resize(tr.states.size());
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    tr.concurrence[i] = concurrence_x(tr.states[i]);
  }
}

}  // namespace focalpair
