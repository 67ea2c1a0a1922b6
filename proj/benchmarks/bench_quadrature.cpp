#include <benchmark/benchmark.h>

#include <cmath>

#include "gibbspk/quadrature.hpp"

namespace {

void BM_IntegrateBetaDensity(benchmark::State& state) {
  const double theta = 2.5;
  for (auto _ : state) {
    auto r = gibbspk::integrate_01(
        [theta](double p) { return std::log(theta) + (theta - 1.0) * std::log(1.0 - p); });
    benchmark::DoNotOptimize(r.log_value);
  }
}
BENCHMARK(BM_IntegrateBetaDensity);

void BM_IntegrateGammaDensity(benchmark::State& state) {
  for (auto _ : state) {
    auto r = gibbspk::integrate_0inf(
        [](double t) { return 2.0 * std::log(t) - t - std::lgamma(3.0); });
    benchmark::DoNotOptimize(r.log_value);
  }
}
BENCHMARK(BM_IntegrateGammaDensity);

void BM_IntegrateEndpointSingular(benchmark::State& state) {
  // p^{-1/2}(1-p)^{-1/2} Beta kernel, the hard endpoint case
  for (auto _ : state) {
    auto r = gibbspk::integrate_01(
        [](double p) { return -0.5 * std::log(p) - 0.5 * std::log(1.0 - p); });
    benchmark::DoNotOptimize(r.log_value);
  }
}
BENCHMARK(BM_IntegrateEndpointSingular);

}  // namespace

BENCHMARK_MAIN();
