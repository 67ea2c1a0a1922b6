#include <benchmark/benchmark.h>

#include "gibbspk/eppf.hpp"

namespace {

void BM_PdTableBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto model = gibbspk::pd_v_weights(0.5, 1.5, n);
    benchmark::DoNotOptimize(model.v(n, n / 2 + 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PdTableBuild)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_GgTableBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double zeta = 1.0;
  for (auto _ : state) {
    // vary zeta to defeat the table cache
    zeta += 1e-6;
    auto model = gibbspk::gg_v_weights(0.5, 1.0, zeta, n);
    benchmark::DoNotOptimize(model.v(n, 1));
  }
}
BENCHMARK(BM_GgTableBuild)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EppfEvaluation(benchmark::State& state) {
  const auto model = gibbspk::pd_v_weights(0.3, 2.0, 40);
  const gibbspk::PartitionShape shape({7, 5, 3, 2, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(gibbspk::log_gibbs_eppf(model, shape));
}
BENCHMARK(BM_EppfEvaluation);

void BM_NormalizationCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = gibbspk::pd_v_weights(0.3, 2.0, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gibbspk::verify_normalization(model, n));
}
BENCHMARK(BM_NormalizationCheck)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SetPartitionEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    gibbspk::for_each_restricted_growth_string(n, [&](std::span<const int>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SetPartitionEnumeration)->Arg(8)->Arg(10)->Arg(12);

}  // namespace
