#include <benchmark/benchmark.h>

#include "mf24/enumerate.hpp"

using namespace mf24;

// Uncached search; level 12 keeps one iteration short, level 24 is the real workload.
static void BM_EnumerateHolomorphic(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_holomorphic_eta_quotients(level, 2));
  }
}
BENCHMARK(BM_EnumerateHolomorphic)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond)->Iterations(1);
