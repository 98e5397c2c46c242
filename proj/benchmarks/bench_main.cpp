#include <benchmark/benchmark.h>

#include "gwdt/correspondence.hpp"

using namespace gwdt;

namespace {

void BM_BuildOperators(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(build_operators());
}
BENCHMARK(BM_BuildOperators);

void BM_InterleaveSum(benchmark::State& state)
{
    TqftOperators ops = build_operators();
    int a = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(interleave_sum(ops.M1, ops.N, a, a));
}
BENCHMARK(BM_InterleaveSum)->Arg(2)->Arg(3);

void BM_ZTrace(benchmark::State& state)
{
    int g = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(z_trace({g, k, k, 1}));
}
BENCHMARK(BM_ZTrace)->Args({2, -2})->Args({4, -5});

void BM_NDt(benchmark::State& state)
{
    int g = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(n_dt(g, k, k));
}
BENCHMARK(BM_NDt)->Args({2, -2})->Args({4, -5});

void BM_McMahon(benchmark::State& state)
{
    HalfExp t = HalfExp::whole(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mcmahon(t, 1, false));
}
BENCHMARK(BM_McMahon)->Arg(8)->Arg(16);

void BM_CorrespondenceCheck(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(check(3, -4, -3));
}
BENCHMARK(BM_CorrespondenceCheck);

}  // namespace

BENCHMARK_MAIN();
