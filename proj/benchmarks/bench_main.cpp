#include <benchmark/benchmark.h>

#include "gasket/exact.hpp"
#include "gasket/sampler.hpp"
#include "gasket/walk.hpp"

using namespace gasket;

static void BM_CountForests(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_forests(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountForests)->Arg(12);

static void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cell_forests(sg3_cell()));
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

static void BM_LengthPgf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(length_pgf(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LengthPgf)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SampleSpanningTree(benchmark::State& state) {
  sg_graph(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_spanning_tree(static_cast<int>(state.range(0)), RngStream(seed++)));
}
BENCHMARK(BM_SampleSpanningTree)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SampleLerw(benchmark::State& state) {
  sg_graph(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_lerw(static_cast<int>(state.range(0)), RngStream(seed++)));
}
BENCHMARK(BM_SampleLerw)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_ForestCounts(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(forest_counts(ForestClass::T, static_cast<int>(state.range(0)), RngStream(seed++)));
}
BENCHMARK(BM_ForestCounts)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Wilson(benchmark::State& state) {
  GraphRef g = sg_graph(static_cast<int>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(wilson_ust(g, rng));
}
BENCHMARK(BM_Wilson)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
