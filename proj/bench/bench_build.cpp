#include <benchmark/benchmark.h>

#include <omp.h>

#include "wpvol/recursion.hpp"

using namespace wpvol;

namespace {

void BM_ReferenceSerial(benchmark::State& state) {
  const auto dim = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    VolumeTable t;
    build_up_to(t, dim, {1, Kernel::reference});
    benchmark::DoNotOptimize(t.size());
  }
}

void BM_Gather(benchmark::State& state) {
  const auto dim = static_cast<unsigned>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    VolumeTable t;
    build_up_to(t, dim, {threads, Kernel::gather});
    benchmark::DoNotOptimize(t.size());
  }
  state.counters["threads"] = threads;
}

void gather_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_num_procs();
  for (int dim : {5, 6, 7}) {
    for (int t = 1; t <= max_threads; t *= 2) b->Args({dim, t});
    if ((max_threads & (max_threads - 1)) != 0) b->Args({dim, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_ReferenceSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Gather)->Apply(gather_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
