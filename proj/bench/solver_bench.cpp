// Serial reference kernels against their OpenMP counterparts.
// Run: ./bench/rainbow_bench --benchmark_counters_tabular=true

#include "rainbow/families.hpp"
#include "rainbow/solver.hpp"

#include <benchmark/benchmark.h>

using namespace rainbow;

namespace {

const ColoredHypergraph& workload(int id)
{
    static const std::vector<ColoredHypergraph> all{
        k2m_family(3).instance,                          // 0: 7 classes of size 8, no FRM
        example1(3, 3, 1, 2).instance,                   // 1: 9 classes of size 8, no FRM
        knn_cayley(7).instance,                          // 2: transversal exists
        thm15_statement1(shannon_triangle(2)).instance,  // 3: proper, no FRM
    };
    return all.at(static_cast<std::size_t>(id));
}

void report(benchmark::State& state, const SolveReport& r)
{
    state.counters["nodes"] = static_cast<double>(r.nodes_explored);
    state.counters["found"] = r.found() ? 1 : 0;
}

void BM_FindFrmSerial(benchmark::State& state)
{
    const auto& inst = workload(static_cast<int>(state.range(0)));
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = detail::find_frm_serial(inst, {}));
    report(state, r);
}

void BM_FindFrmParallel(benchmark::State& state)
{
    const auto& inst = workload(static_cast<int>(state.range(0)));
    SolveOptions options;
    options.threads = static_cast<int>(state.range(1));
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = find_frm(inst, options));
    report(state, r);
}

void BM_BruteForceSerial(benchmark::State& state)
{
    const auto& inst = workload(static_cast<int>(state.range(0)));
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = detail::brute_force_frm_serial(inst, {}));
    state.counters["candidates"] = static_cast<double>(r.candidates_examined);
}

void BM_BruteForceParallel(benchmark::State& state)
{
    const auto& inst = workload(static_cast<int>(state.range(0)));
    SolveOptions options;
    options.threads = static_cast<int>(state.range(1));
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = brute_force_frm(inst, options));
    state.counters["candidates"] = static_cast<double>(r.candidates_examined);
}

}  // namespace

BENCHMARK(BM_FindFrmSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FindFrmParallel)
    ->ArgsProduct({{0, 1, 2, 3}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_BruteForceSerial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BruteForceParallel)->ArgsProduct({{0, 2}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
