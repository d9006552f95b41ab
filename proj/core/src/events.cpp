#include "focalpair/events.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace focalpair {
namespace {

// Root of f on [a, b] given f(a) and f(b) straddle zero.
double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200 && b - a > 1e-12; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Minimum of f on [a, b] by golden-section search.
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double a, double b) {
  constexpr double kGr = 0.6180339887498949;
  double x1 = b - kGr * (b - a);
  double x2 = a + kGr * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 200 && b - a > 1e-10; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGr * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

struct Event {
  double t;
  bool is_birth;
};

}  // namespace

EntanglementEvents detect_events(const Trajectory& curve,
                                 const EventOptions& opts) {
  const auto& T = curve.times;
  const auto& C = curve.concurrence;
  if (T.size() < 2 || C.size() != T.size()) {
    throw std::invalid_argument("curve needs a filled concurrence column");
  }
  for (std::size_t i = 1; i < T.size(); ++i) {
    if (!(T[i] > T[i - 1]) || T[i] - T[i - 1] > 1e-2 + 1e-9) {
      throw std::invalid_argument("curve must be sampled with step <= 1e-2");
    }
  }
  const double tol = opts.zero_tol;
  const auto above = [tol](double v) { return v > tol; };
  const auto shifted = [&](double t) { return opts.continuous(t) - tol; };

  std::vector<Event> events;
  // zero crossings visible in the samples themselves
  for (std::size_t i = 1; i < T.size(); ++i) {
    const bool was = above(C[i - 1]);
    if (was == above(C[i])) continue;
    double tc;
    if (opts.continuous) {
      tc = bisect(shifted, T[i - 1], T[i]);
    } else {
      const double d0 = C[i - 1] - tol;
      tc = T[i - 1] + (T[i] - T[i - 1]) * d0 / (d0 - (C[i] - tol));
    }
    events.push_back({tc, !was});
  }
  // dips between positive samples that reach zero only sub-grid
  if (opts.continuous) {
    for (std::size_t i = 1; i + 1 < T.size(); ++i) {
      if (!(C[i] <= C[i - 1] && C[i] <= C[i + 1])) continue;
      if (!above(C[i - 1]) || !above(C[i]) || !above(C[i + 1])) continue;
      const auto [t_min, v_min] = golden_min(opts.continuous, T[i - 1], T[i + 1]);
      if (v_min > tol) continue;
      double left = 0.0;
      for (std::size_t j = i + 1; j-- > 0 && above(C[j]);) {
        left = std::max(left, C[j]);
      }
      double right = 0.0;
      for (std::size_t j = i; j < T.size() && above(C[j]); ++j) {
        right = std::max(right, C[j]);
      }
      if (left < opts.revival_floor || right < opts.revival_floor) continue;
      events.push_back({bisect(shifted, T[i - 1], t_min), false});
      events.push_back({bisect(shifted, t_min, T[i + 1]), true});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.t < b.t; });

  EntanglementEvents out;
  for (const Event& e : events) {
    (e.is_birth ? out.birth_times : out.death_times).push_back(e.t);
  }
  const auto it = std::max_element(C.begin(), C.end());
  std::size_t k = static_cast<std::size_t>(it - C.begin());
  out.peak_time = T[k];
  out.peak_value = *it;
  if (opts.continuous && out.peak_value > tol) {
    const double a = T[k > 0 ? k - 1 : 0];
    const double b = T[std::min(k + 1, T.size() - 1)];
    const auto [t_pk, neg] =
        golden_min([&](double t) { return -opts.continuous(t); }, a, b);
    if (-neg >= out.peak_value) {
      out.peak_time = t_pk;
      out.peak_value = -neg;
    }
  }
  return out;
}

EntanglementEvents detect_events(const Trajectory& curve, double zero_tol) {
  EventOptions opts;
  opts.zero_tol = zero_tol;
  return detect_events(curve, opts);
}

}  // namespace focalpair
