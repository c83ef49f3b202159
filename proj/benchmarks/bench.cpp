#include <benchmark/benchmark.h>

#include <random>

#include "tancone/classify.hpp"
#include "tancone/examples.hpp"
#include "tancone/trace.hpp"

using namespace tancone;

namespace {

void bm_nullspace(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    int n = static_cast<int>(state.range(0));
    RationalMatrix m(n, 2 * n);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = Rat(d(rng));
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(bm_nullspace)->Arg(6)->Arg(12)->Arg(24);

void bm_constraint_systems(benchmark::State& state) {
    Linkage l = parse_linkage(examples::sevenR());
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(constraint_systems(l, order));
}
BENCHMARK(bm_constraint_systems)->Arg(2)->Arg(3)->Arg(4);

void bm_tangent_cone_sevenr(benchmark::State& state) {
    Linkage l = parse_linkage(examples::sevenR());
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tangent_cone(l, order));
}
BENCHMARK(bm_tangent_cone_sevenr)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_tangent_cone_sixbar(benchmark::State& state) {
    Linkage l = parse_linkage(examples::sixbar());
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tangent_cone(l, order));
}
BENCHMARK(bm_tangent_cone_sixbar)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_classify_sevenr(benchmark::State& state) {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 6);
    for (auto _ : state) benchmark::DoNotOptimize(classify(a));
}
BENCHMARK(bm_classify_sevenr)->Unit(benchmark::kMillisecond);

void bm_trace_branch(benchmark::State& state) {
    Linkage l = parse_linkage(examples::sevenR());
    ConeAnalysis a = tangent_cone(l, 4);
    const SolutionBranch& b = a.stages.back().branches[1];
    std::map<VarId, double> params;
    for (VarId p : b.params) params[p] = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(trace_branch(l, b, params, 8, 0.02));
}
BENCHMARK(bm_trace_branch)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
