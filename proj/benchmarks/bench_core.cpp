#include <benchmark/benchmark.h>

#include "causalbound/inequalities.hpp"
#include "causalbound/nonsignaling.hpp"
#include "causalbound/qubit.hpp"
#include "causalbound/strategies.hpp"
#include "causalbound/thresholds.hpp"

using namespace causalbound;

static void BM_ViolationEval(benchmark::State& state) {
  const CausalDistribution d = induced_causal(canonical_ns(2));
  const InequalitySpec spec{Inequality::Qace, 2};
  for (auto _ : state) benchmark::DoNotOptimize(violation(d, spec, 1.0));
}
BENCHMARK(BM_ViolationEval);

static void BM_EnumerateStrategies(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_strategies(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateStrategies)->DenseRange(2, 7);

static void BM_AuditDeterministic(benchmark::State& state) {
  const std::vector<double> grid = {0.5, 0.75, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(audit_bound({Inequality::I222, 2}, grid, 0, 0));
}
BENCHMARK(BM_AuditDeterministic);

static void BM_MixtureSample(benchmark::State& state) {
  const auto strategies = enumerate_strategies(2);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const StrategyMixture mix = sample_mixture(strategies, rng);
    benchmark::DoNotOptimize(mix.induced_distribution(0.9));
  }
}
BENCHMARK(BM_MixtureSample);

static void BM_QubitCorrelation(benchmark::State& state) {
  const QubitCorrelationParams p = reference_optimum_params();
  for (auto _ : state) benchmark::DoNotOptimize(correlation_from_params(p));
}
BENCHMARK(BM_QubitCorrelation);

static void BM_OptimizeOneRestart(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_violation({Inequality::Cace, 2}, 1.0, 1, 1));
}
BENCHMARK(BM_OptimizeOneRestart);

static void BM_NsMaxLp(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const InequalitySpec spec{m == 2 ? Inequality::Cace : Inequality::Im22, m};
  for (auto _ : state) benchmark::DoNotOptimize(ns_max_violation(spec, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NsMaxLp)->DenseRange(2, 6);

static void BM_ThresholdBisect(benchmark::State& state) {
  const auto curve = witness_curve({Inequality::Qace, 2}, CorrelationFamily::Nonsignaling);
  for (auto _ : state) benchmark::DoNotOptimize(threshold_bisect(curve, 1e-8));
}
BENCHMARK(BM_ThresholdBisect);

BENCHMARK_MAIN();
