#include <benchmark/benchmark.h>

#include "polychi/enumerate.hpp"
#include "polychi/extremal.hpp"
#include "polychi/index.hpp"

using namespace polychi;

static void BM_Enumerate(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_chains({n, false, true}));
}
BENCHMARK(BM_Enumerate)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ChiDirect(benchmark::State& state)
{
    const auto c = build_from_turns(make_zdagger(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(chi_direct(c, Alpha(-4.0)));
}
BENCHMARK(BM_ChiDirect)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ChiClosed(benchmark::State& state)
{
    const auto lv = length_vector(make_zdagger(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(chi_closed(lv, Alpha(-4.0)));
}
BENCHMARK(BM_ChiClosed)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ExtremalSearch(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(extremal_search(n, -4.0));
}
BENCHMARK(BM_ExtremalSearch)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
