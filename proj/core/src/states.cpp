#include "focalpair/states.hpp"

#include <cmath>
#include <stdexcept>

namespace focalpair {
namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kPopTol = 1e-12;
constexpr double kMinorTol = 1e-10;
constexpr double kHermTol = 1e-12;
constexpr double kEigTol = 1e-10;

bool in_unit_range(double v) { return v >= -kPopTol && v <= 1.0 + kPopTol; }

}  // namespace

void XState::validate() const {
  if (!in_unit_range(rho_gg) || !in_unit_range(rho_ee) ||
      !in_unit_range(rho_ss) || !in_unit_range(rho_aa)) {
    throw std::domain_error("population out of [0, 1]");
  }
  if (std::abs(trace() - 1.0) > kTraceTol) {
    throw std::domain_error("trace differs from 1");
  }
  // written as !(<=) so NaN coherences fail too
  if (!(std::norm(rho_as) <= rho_ss * rho_aa + kMinorTol)) {
    throw std::domain_error("|rho_as|^2 exceeds rho_ss*rho_aa");
  }
  if (!(std::norm(rho_eg) <= rho_ee * rho_gg + kMinorTol)) {
    throw std::domain_error("|rho_eg|^2 exceeds rho_ee*rho_gg");
  }
}

double TwoQubitState::min_eigenvalue() const {
  Eigen::Matrix4cd sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(sym,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double TwoQubitState::hermiticity_defect() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double TwoQubitState::x_leakage() const {
  double leak = 0.0;
  constexpr int off[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (auto [i, j] : off) {
    leak = std::max({leak, std::abs(rho(i, j)), std::abs(rho(j, i))});
  }
  return leak;
}

void TwoQubitState::validate() const {
  if (hermiticity_defect() > kHermTol) {
    throw std::domain_error("matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw std::domain_error("trace differs from 1");
  }
  if (min_eigenvalue() < -kEigTol) {
    throw std::domain_error("negative eigenvalue");
  }
}

TwoQubitState collective_to_bare(const XState& x) {
  TwoQubitState s;
  auto& m = s.rho;
  const double re_as = std::real(x.rho_as);
  const double im_as = std::imag(x.rho_as);
  m(0, 0) = x.rho_gg;
  m(3, 3) = x.rho_ee;
  m(1, 1) = 0.5 * (x.rho_ss + x.rho_aa) - re_as;
  m(2, 2) = 0.5 * (x.rho_ss + x.rho_aa) + re_as;
  m(1, 2) = Complex(0.5 * (x.rho_ss - x.rho_aa), -im_as);
  m(2, 1) = std::conj(m(1, 2));
  m(0, 3) = std::conj(x.rho_eg);
  m(3, 0) = x.rho_eg;
  return s;
}

XState bare_to_collective(const TwoQubitState& s, double x_tol) {
  if (s.x_leakage() > x_tol) {
    throw std::domain_error("matrix entries outside the X pattern");
  }
  const auto& m = s.rho;
  XState x;
  x.rho_gg = std::real(m(0, 0));
  x.rho_ee = std::real(m(3, 3));
  const double d11 = std::real(m(1, 1));
  const double d22 = std::real(m(2, 2));
  const Complex c12 = 0.5 * (m(1, 2) + std::conj(m(2, 1)));
  x.rho_ss = 0.5 * (d11 + d22) + std::real(c12);
  x.rho_aa = 0.5 * (d11 + d22) - std::real(c12);
  x.rho_as = Complex(0.5 * (d22 - d11), -std::imag(c12));
  x.rho_eg = 0.5 * (m(3, 0) + std::conj(m(0, 3)));
  return x;
}

}  // namespace focalpair
