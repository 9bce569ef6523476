// Serial reference against the OpenMP kernel on the same sums.
#include <benchmark/benchmark.h>

#include <cmath>

#include "rf/kernels.hpp"
#include "rf/partitions.hpp"

namespace {

const rf::RealFn kCheap = [](double t) { return std::sin(t) * std::exp(-t); };
const rf::RealFn kDear = [](double t) { return std::log1p(std::cosh(t)) / (1.0 + t * t); };

template <double (*Kernel)(const rf::RealFn&, double, double, std::size_t, const rf::TagRule&)>
void uniform(benchmark::State& state, const rf::RealFn& f) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, 0.0, 3.0, n, rf::TagRule::midpoint()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_UniformSerialCheap(benchmark::State& s) { uniform<rf::kernels::uniform_sum_serial>(s, kCheap); }
void BM_UniformParallelCheap(benchmark::State& s) { uniform<rf::kernels::uniform_sum_parallel>(s, kCheap); }
void BM_UniformSerialDear(benchmark::State& s) { uniform<rf::kernels::uniform_sum_serial>(s, kDear); }
void BM_UniformParallelDear(benchmark::State& s) { uniform<rf::kernels::uniform_sum_parallel>(s, kDear); }

template <double (*Kernel)(const rf::RealFn&, const rf::TaggedPartition&)>
void geometric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const rf::TaggedPartition p = rf::geometric_partition(1.0, 10.0, n, rf::TagRule::left());
  const rf::RealFn recip = [](double t) { return 1.0 / t; };
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(recip, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GeometricSerial(benchmark::State& s) { geometric<rf::kernels::partition_sum_serial>(s); }
void BM_GeometricParallel(benchmark::State& s) { geometric<rf::kernels::partition_sum_parallel>(s); }

}  // namespace

BENCHMARK(BM_UniformSerialCheap)->RangeMultiplier(16)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_UniformParallelCheap)->RangeMultiplier(16)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_UniformSerialDear)->RangeMultiplier(16)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_UniformParallelDear)->RangeMultiplier(16)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_GeometricSerial)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_GeometricParallel)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);

BENCHMARK_MAIN();
