#include <benchmark/benchmark.h>

#include "gibbspk/samplers.hpp"

namespace {

void BM_CrpSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gibbspk::RandomSource source(1);
  for (auto _ : state) benchmark::DoNotOptimize(gibbspk::crp_sample(0.5, 0.5, n, source));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_CrpSample)->Arg(10)->Arg(100)->Arg(1000);

void BM_PredictiveSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = gibbspk::pd_v_weights(0.5, 0.5, 40);
  gibbspk::RandomSource source(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(gibbspk::gibbs_predictive_sample(model, n, source));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_PredictiveSample)->Arg(10)->Arg(30);

void BM_FisherSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gibbspk::RandomSource source(1);
  for (auto _ : state) benchmark::DoNotOptimize(gibbspk::fisher_sample(-0.5, 20, n, source));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_FisherSample)->Arg(10)->Arg(100);

void BM_GammaVariate(benchmark::State& state) {
  gibbspk::RandomSource source(1);
  for (auto _ : state) benchmark::DoNotOptimize(source.gamma(0.5));
}
BENCHMARK(BM_GammaVariate);

}  // namespace
