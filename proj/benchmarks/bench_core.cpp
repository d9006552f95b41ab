#include <benchmark/benchmark.h>

#include <cmath>

#include "focalpair/closed_form.hpp"
#include "focalpair/concurrence.hpp"
#include "focalpair/geometry.hpp"
#include "focalpair/integrator.hpp"

namespace {

using namespace focalpair;

const SystemParams kParams{0.8, 0.5 * 3.14159265358979323846, 0.4};

void BM_ClosedFormEval(benchmark::State& state) {
  const InitialCondition init = InitialCondition::one_excited();
  double t = 0.0;
  for (auto _ : state) {
    t = t >= 10.0 ? 0.0 : t + 1e-3;
    benchmark::DoNotOptimize(evolve_closed_form(kParams, init, t));
  }
}
BENCHMARK(BM_ClosedFormEval);

void BM_ConcurrenceX(benchmark::State& state) {
  const XState x = evolve_closed_form(kParams, InitialCondition::one_excited(), 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_x(x));
  }
}
BENCHMARK(BM_ConcurrenceX);

void BM_ConcurrenceGeneral(benchmark::State& state) {
  const TwoQubitState s = collective_to_bare(
      evolve_closed_form(kParams, InitialCondition::one_excited(), 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_general(s));
  }
}
BENCHMARK(BM_ConcurrenceGeneral);

void BM_Rk4Collective(benchmark::State& state) {
  IntegratorConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate(kParams, InitialCondition::one_excited(), cfg,
                  Basis::collective));
  }
}
BENCHMARK(BM_Rk4Collective);

void BM_Rk4Bare(benchmark::State& state) {
  IntegratorConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(kParams, InitialCondition::one_excited(),
                                       cfg, Basis::bare));
  }
}
BENCHMARK(BM_Rk4Bare);

void BM_ConeQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa_from_cone(1.0, 0.3));
  }
}
BENCHMARK(BM_ConeQuadrature);

}  // namespace

BENCHMARK_MAIN();
