#include "focalpair/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace focalpair {
namespace {

constexpr double kPi = std::numbers::pi;

// Radiation-pattern weight of a direction (theta, phi) measured in the cone
// frame, for a z-oriented dipole and a cone axis tilted by beta towards x.
// Includes the sin(theta) area element.
double pattern(double theta, double phi, double cos_beta, double sin_beta) {
  const double st = std::sin(theta);
  const double kz = std::cos(theta) * cos_beta - st * std::cos(phi) * sin_beta;
  return st * (1.0 - kz * kz);
}

struct Panel {
  double t0, t1, p0, p1;
};

// Tensor Gauss-Legendre rule over one panel.
template <std::size_t N>
double gauss_panel(const Panel& q, const double (&x)[N], const double (&w)[N],
                   double cb, double sb) {
  const double tc = 0.5 * (q.t0 + q.t1), th = 0.5 * (q.t1 - q.t0);
  const double pc = 0.5 * (q.p0 + q.p1), ph = 0.5 * (q.p1 - q.p0);
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      inner += w[j] * pattern(tc + th * x[i], pc + ph * x[j], cb, sb);
    }
    sum += w[i] * inner;
  }
  return sum * th * ph;
}

constexpr double kX3[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kW3[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
constexpr double kX5[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                           0.5384693101056831, 0.9061798459386640};
constexpr double kW5[5] = {0.2369268850561891, 0.4786286704993665,
                           0.5688888888888889, 0.4786286704993665,
                           0.2369268850561891};

}  // namespace

double kappa_cone_axial(double half_angle) {
  if (!(half_angle >= 0.0 && half_angle <= kPi)) {
    throw std::domain_error("half_angle must lie in [0, pi]");
  }
  // 3/4 * ((1 - c) - (1 - c^3)/3) factored as sin^4(a/2) * (2 + c); the
  // unfactored form loses all precision for small apertures.
  const double s = std::sin(0.5 * half_angle);
  return s * s * s * s * (2.0 + std::cos(half_angle));
}

double kappa_from_cone(double half_angle, double axis_tilt) {
  if (!(half_angle >= 0.0 && half_angle <= kPi)) {
    throw std::domain_error("half_angle must lie in [0, pi]");
  }
  if (!(axis_tilt >= 0.0 && axis_tilt <= kPi / 2.0)) {
    throw std::domain_error("axis_tilt must lie in [0, pi/2]");
  }
  if (half_angle == 0.0) {
    return 0.0;
  }
  if (half_angle == kPi) {
    return 1.0;  // full sphere, tilt irrelevant
  }

  const double cb = std::cos(axis_tilt), sb = std::sin(axis_tilt);
  const double total_area = half_angle * 2.0 * kPi;
  constexpr double kTol = 1e-10;
  // The overall prefactor is 3/(8 pi), so keep the raw-integral budget a bit
  // below tol / prefactor.
  const double budget = kTol * (8.0 * kPi / 3.0) * 0.5;

  double integral = 0.0;
  std::vector<Panel> stack{{0.0, half_angle, 0.0, 2.0 * kPi}};
  while (!stack.empty()) {
    const Panel q = stack.back();
    stack.pop_back();
    const double coarse = gauss_panel(q, kX3, kW3, cb, sb);
    const double fine = gauss_panel(q, kX5, kW5, cb, sb);
    const double area = (q.t1 - q.t0) * (q.p1 - q.p0);
    const double allowed = budget * area / total_area;
    if (std::abs(fine - coarse) <= allowed || area < 1e-14 * total_area) {
      integral += fine;
      continue;
    }
    const double tm = 0.5 * (q.t0 + q.t1), pm = 0.5 * (q.p0 + q.p1);
    stack.push_back({q.t0, tm, q.p0, pm});
    stack.push_back({q.t0, tm, pm, q.p1});
    stack.push_back({tm, q.t1, q.p0, pm});
    stack.push_back({tm, q.t1, pm, q.p1});
  }
  return 3.0 / (8.0 * kPi) * integral;
}

}  // namespace focalpair
