// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <numbers>

#include "triloc/state.hpp"
#include "triloc/svetlichny.hpp"
#include "triloc/sweep.hpp"

namespace {

using namespace triloc;

const CorrelationTensor& ghz_tensor() {
  static const auto t = correlation_tensor(ghz_class(0.99, std::numbers::pi / 3, 0.6215));
  return t;
}

void BM_SvetlichnyParallel(benchmark::State& state) {
  OptimizerConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(svetlichny_max(ghz_tensor(), cfg).value);
}

void BM_SvetlichnySerial(benchmark::State& state) {
  OptimizerConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(svetlichny_max_serial(ghz_tensor(), cfg).value);
}

SweepSpec sweep_spec() {
  SweepSpec spec;
  spec.r_values = {0.1, 20.0};
  spec.taus = linspace(0.0, 2.0, 16);
  spec.optimizer.starts = 16;
  return spec;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = sweep_spec();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec).size());
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = sweep_spec();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(spec).size());
}

}  // namespace

BENCHMARK(BM_SvetlichnyParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SvetlichnySerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
