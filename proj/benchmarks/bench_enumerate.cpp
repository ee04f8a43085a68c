#include <benchmark/benchmark.h>

#include "latcap/enumerate.hpp"

using namespace latcap;

static void BM_rectangle_width2(benchmark::State& state) {
  int n = (int)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_rectangle(2, n));
  }
}
BENCHMARK(BM_rectangle_width2)->Arg(6)->Arg(10)->Arg(14);

static void BM_rectangle_width3(benchmark::State& state) {
  int n = (int)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_rectangle(3, n));
  }
}
BENCHMARK(BM_rectangle_width3)->Arg(4)->Arg(8);

static void BM_trapezoid4(benchmark::State& state) {
  int n = (int)state.range(0);
  for (auto _ : state) {
    RegionSpec spec;
    spec.kind = RegionKind::trapezoid4;
    spec.profile = {n / 2, n - n / 2 - (n & 1)};
    benchmark::DoNotOptimize(count_trapezoid(spec));
  }
}
BENCHMARK(BM_trapezoid4)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
