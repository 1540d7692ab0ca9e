#include <benchmark/benchmark.h>

#include "supersat/construct.hpp"
#include "supersat/counting.hpp"

using namespace supersat;

static void BM_CountK4InTuranPlus(benchmark::State& state) {
    Graph host = build_turan_plus_edge(static_cast<int>(state.range(0)), 3).graph;
    PatternProfile k4 = build_pattern_profile(build_clique(4), "K4");
    for (auto _ : state) benchmark::DoNotOptimize(count_copies(host, k4));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountK4InTuranPlus)->Arg(12)->Arg(30)->Arg(60)->Complexity();

static void BM_CountC5InTuranPlus(benchmark::State& state) {
    Graph host = build_turan_plus_edge(static_cast<int>(state.range(0)), 2).graph;
    PatternProfile c5 = build_pattern_profile(build_cycle(5), "C5");
    for (auto _ : state) benchmark::DoNotOptimize(count_copies(host, c5));
}
BENCHMARK(BM_CountC5InTuranPlus)->Arg(10)->Arg(14);

static void BM_CExactFormula(benchmark::State& state) {
    PatternProfile c5 = build_pattern_profile(build_cycle(5), "C5");
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(c_exact(n, c5).to_double());
}
BENCHMARK(BM_CExactFormula)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_CBruteforce(benchmark::State& state) {
    PatternProfile k3 = build_pattern_profile(build_clique(3), "K3");
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(c_bruteforce(n, k3).to_double());
}
BENCHMARK(BM_CBruteforce)->Arg(12)->Arg(24)->Arg(48);

static void BM_PatternProfileBuild(benchmark::State& state) {
    Graph petersen = build_petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pattern_profile(petersen, "petersen").aut);
}
BENCHMARK(BM_PatternProfileBuild);
