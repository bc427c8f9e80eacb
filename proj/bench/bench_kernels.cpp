// Serial reference vs OpenMP kernels on the workloads the library runs.
//
//   ./build/bench_kernels --benchmark_filter=Convolve

#include <benchmark/benchmark.h>

#include "betti/kernels.hpp"
#include "betti/partition_core.hpp"
#include "betti/qseries.hpp"

namespace {

using betti::Exec;

void BM_Convolve(benchmark::State& state, Exec exec) {
  const auto order = state.range(0);
  const auto p = betti::partition_counts_upto(order);
  std::vector<betti::BigInt> out(static_cast<std::size_t>(order) + 1);
  for (auto _ : state) {
    betti::kernels::convolve(exec, p, p, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK_CAPTURE(BM_Convolve, serial, Exec::serial)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Convolve, parallel, Exec::parallel)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_ExactMultiplesBivariate(benchmark::State& state, Exec exec) {
  const auto order = state.range(0);
  for (auto _ : state) {
    auto series = betti::coefficients_exact_multiples(3, order / 3, order, exec);
    benchmark::DoNotOptimize(series.at(0, order));
  }
}
BENCHMARK_CAPTURE(BM_ExactMultiplesBivariate, serial, Exec::serial)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExactMultiplesBivariate, parallel, Exec::parallel)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_ExactMultiplesAll(benchmark::State& state, Exec exec) {
  const auto n = state.range(0);
  betti::regular_partition_count(2, n);  // warm the memo
  for (auto _ : state) {
    auto counts = betti::count_multiples_exact_all(2, n, exec);
    benchmark::DoNotOptimize(counts.data());
  }
}
BENCHMARK_CAPTURE(BM_ExactMultiplesAll, serial, Exec::serial)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExactMultiplesAll, parallel, Exec::parallel)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
