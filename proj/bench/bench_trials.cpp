#include <benchmark/benchmark.h>

#include "folia/trials.hpp"

using namespace folia;

namespace {

BatchOptions opts(benchmark::State& state) {
  BatchOptions o;
  o.seed = 7;
  o.schedule = state.range(0) ? Schedule::Parallel : Schedule::Serial;
  return o;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_ProjectiveBounds(benchmark::State& state) {
  auto specs = projective_mix(24);
  for (auto _ : state) benchmark::DoNotOptimize(run_projective_trials(specs, opts(state)));
  label(state);
}

void BM_GermLengths(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_germ_trials(64, 4, opts(state)));
  label(state);
}

void BM_KeyLemma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_key_lemma_trials(32, opts(state)));
  label(state);
}

void BM_ChartCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_chart_trials(64, opts(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_ProjectiveBounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GermLengths)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KeyLemma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChartCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
