#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "focalpair/states.hpp"

using namespace focalpair;
using Catch::Approx;

namespace {

// Random density matrix of the X pattern: positivity is equivalent to the
// two 2x2 blocks {ss,aa|as} and {ee,gg|eg} being PSD, so coherences are drawn
// inside their minors.
XState random_x_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double w[4] = {u(rng) + 1e-3, u(rng) + 1e-3, u(rng) + 1e-3, u(rng) + 1e-3};
  const double sum = w[0] + w[1] + w[2] + w[3];
  XState x;
  x.rho_gg = w[0] / sum;
  x.rho_ee = w[1] / sum;
  x.rho_ss = w[2] / sum;
  x.rho_aa = w[3] / sum;
  const double m1 = std::sqrt(x.rho_ss * x.rho_aa) * u(rng) * 0.999;
  const double a1 = 2.0 * 3.141592653589793 * u(rng);
  x.rho_as = std::polar(m1, a1);
  const double m2 = std::sqrt(x.rho_ee * x.rho_gg) * u(rng) * 0.999;
  const double a2 = 2.0 * 3.141592653589793 * u(rng);
  x.rho_eg = std::polar(m2, a2);
  return x;
}

double x_distance(const XState& a, const XState& b) {
  double d = std::abs(a.rho_gg - b.rho_gg);
  d = std::max(d, std::abs(a.rho_ee - b.rho_ee));
  d = std::max(d, std::abs(a.rho_ss - b.rho_ss));
  d = std::max(d, std::abs(a.rho_aa - b.rho_aa));
  d = std::max(d, std::abs(a.rho_as - b.rho_as));
  d = std::max(d, std::abs(a.rho_eg - b.rho_eg));
  return d;
}

}  // namespace

TEST_CASE("X state validation") {
  XState ok;
  ok.rho_gg = 0.25;
  ok.rho_ee = 0.25;
  ok.rho_ss = 0.25;
  ok.rho_aa = 0.25;
  CHECK_NOTHROW(ok.validate());

  SECTION("trace must be one") {
    XState x = ok;
    x.rho_gg = 0.3;
    CHECK_THROWS_AS(x.validate(), std::domain_error);
  }
  SECTION("populations must be nonnegative") {
    XState x = ok;
    x.rho_ee = -0.01;
    x.rho_gg = 0.51;
    CHECK_THROWS_AS(x.validate(), std::domain_error);
  }
  SECTION("coherences are bounded by their minors") {
    XState x = ok;
    x.rho_as = Complex(0.26, 0.0);  // > sqrt(0.25 * 0.25)
    CHECK_THROWS_AS(x.validate(), std::domain_error);
    x.rho_as = Complex(0.0, 0.0);
    x.rho_eg = Complex(0.2, 0.2);  // modulus > 0.25
    CHECK_THROWS_AS(x.validate(), std::domain_error);
  }
  SECTION("non-finite entries are rejected") {
    XState x = ok;
    x.rho_as = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(x.validate(), std::domain_error);
  }
}

TEST_CASE("single-excitation collective states map to the expected bare kets") {
  SECTION("atom 1 excited") {
    XState x;
    x.rho_ss = 0.5;
    x.rho_aa = 0.5;
    x.rho_as = Complex(0.5, 0.0);
    const TwoQubitState s = collective_to_bare(x);
    CHECK(s.rho(2, 2).real() == Approx(1.0).margin(1e-15));
    CHECK(std::abs(s.rho(1, 1)) == Approx(0.0).margin(1e-15));
    CHECK(std::abs(s.rho(1, 2)) == Approx(0.0).margin(1e-15));
  }
  SECTION("symmetric Bell state") {
    XState x;
    x.rho_ss = 1.0;
    const TwoQubitState s = collective_to_bare(x);
    CHECK(s.rho(1, 1).real() == Approx(0.5));
    CHECK(s.rho(2, 2).real() == Approx(0.5));
    CHECK(s.rho(1, 2).real() == Approx(0.5));
    CHECK(s.rho(1, 2).imag() == Approx(0.0).margin(1e-15));
  }
  SECTION("antisymmetric Bell state") {
    XState x;
    x.rho_aa = 1.0;
    const TwoQubitState s = collective_to_bare(x);
    CHECK(s.rho(1, 1).real() == Approx(0.5));
    CHECK(s.rho(2, 2).real() == Approx(0.5));
    CHECK(s.rho(1, 2).real() == Approx(-0.5));
  }
}

TEST_CASE("imaginary as-coherence shows up as the bare cross coherence") {
  XState x;
  x.rho_ss = 0.5;
  x.rho_aa = 0.5;
  x.rho_as = Complex(0.0, 0.3);
  const TwoQubitState s = collective_to_bare(x);
  // rho_23 = (ss - aa - 2 i Im as) / 2
  CHECK(s.rho(1, 2).real() == Approx(0.0).margin(1e-15));
  CHECK(s.rho(1, 2).imag() == Approx(-0.3).margin(1e-15));
  CHECK(s.rho(2, 1).imag() == Approx(0.3).margin(1e-15));
}

TEST_CASE("double-excitation coherence sits on the antidiagonal") {
  XState x;
  x.rho_ee = 0.5;
  x.rho_gg = 0.5;
  x.rho_eg = Complex(0.2, -0.1);
  const TwoQubitState s = collective_to_bare(x);
  CHECK(s.rho(3, 0).real() == Approx(0.2));
  CHECK(s.rho(3, 0).imag() == Approx(-0.1));
  CHECK(s.rho(0, 3).imag() == Approx(0.1));
}

TEST_CASE("round trip through the bare basis is lossless") {
  std::mt19937 rng(91);
  for (int i = 0; i < 300; ++i) {
    const XState x = random_x_state(rng);
    REQUIRE_NOTHROW(x.validate());
    const TwoQubitState s = collective_to_bare(x);
    CHECK(s.trace_real() == Approx(1.0).margin(1e-14));
    CHECK(s.hermiticity_defect() <= 1e-15);
    CHECK(s.min_eigenvalue() >= -1e-12);
    CHECK(s.x_leakage() == 0.0);
    const XState back = bare_to_collective(s);
    CHECK(x_distance(x, back) <= 1e-14);
  }
}

TEST_CASE("leakage outside the X pattern is measured and rejected") {
  XState x;
  x.rho_ss = 0.5;
  x.rho_aa = 0.5;
  TwoQubitState s = collective_to_bare(x);
  s.rho(0, 1) = Complex(3e-9, 0.0);
  s.rho(1, 0) = Complex(3e-9, 0.0);
  CHECK(s.x_leakage() == Approx(3e-9));
  CHECK_THROWS_AS(bare_to_collective(s, 1e-10), std::domain_error);
  CHECK_NOTHROW(bare_to_collective(s, 1e-8));
}

TEST_CASE("hermiticity defect flags asymmetric perturbations") {
  XState x;
  x.rho_ss = 1.0;
  TwoQubitState s = collective_to_bare(x);
  CHECK(s.hermiticity_defect() <= 1e-16);
  s.rho(1, 2) += Complex(0.0, 1e-7);
  CHECK(s.hermiticity_defect() >= 0.9e-7);
}

TEST_CASE("two-qubit validation rejects unphysical matrices") {
  XState x;
  x.rho_ss = 1.0;
  TwoQubitState s = collective_to_bare(x);
  CHECK_NOTHROW(s.validate());
  s.rho(0, 0) = -0.2;
  s.rho(1, 1) += 0.2;
  CHECK_THROWS_AS(s.validate(), std::domain_error);
}
