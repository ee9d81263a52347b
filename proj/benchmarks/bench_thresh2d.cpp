#include "thresh2d/arrangement.hpp"
#include "thresh2d/formulas.hpp"
#include "thresh2d/teaching.hpp"

#include <benchmark/benchmark.h>

using namespace thresh2d;

static void BM_FSum(benchmark::State& state) {
    GridDims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f_sum(1, d));
}
BENCHMARK(BM_FSum)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CountReport(benchmark::State& state) {
    GridDims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_report(d));
}
BENCHMARK(BM_CountReport)->Arg(10)->Arg(100);

static void BM_EnumerateThreshold(benchmark::State& state) {
    GridDims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_threshold(d));
}
BENCHMARK(BM_EnumerateThreshold)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_TeachingCensus(benchmark::State& state) {
    GridDims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(teaching_census(d));
}
BENCHMARK(BM_TeachingCensus)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PlaneArrangement(benchmark::State& state) {
    GridDims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(plane_arrangement(d));
}
BENCHMARK(BM_PlaneArrangement)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TriangleArrangement(benchmark::State& state) {
    GridDims d(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(triangle_arrangement(d));
}
BENCHMARK(BM_TriangleArrangement)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
