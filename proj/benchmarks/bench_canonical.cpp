#include <benchmark/benchmark.h>

#include "supersat/canonical.hpp"
#include "supersat/construct.hpp"
#include "supersat/enumerate.hpp"
#include "supersat/rng.hpp"

using namespace supersat;

namespace {

Graph gnp(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

}  // namespace

static void BM_CanonicalFormPetersen(benchmark::State& state) {
    Graph g = build_petersen();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).size());
}
BENCHMARK(BM_CanonicalFormPetersen);

static void BM_CanonicalFormSparse(benchmark::State& state) {
    Graph g = gnp(static_cast<int>(state.range(0)), 0.25, 23);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).size());
}
BENCHMARK(BM_CanonicalFormSparse)->Arg(12)->Arg(16)->Arg(20);

static void BM_EnumerateClasses(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EnumerateOptions opts;
        opts.max_n = 2 * m;
        opts.m = m;
        opts.dedupe = true;
        opts.override_guardrails = true;
        benchmark::DoNotOptimize(enumerate_collect(opts).size());
    }
}
BENCHMARK(BM_EnumerateClasses)->Arg(5)->Arg(6)->Arg(7);

static void BM_AutomorphismCount(benchmark::State& state) {
    Graph g = build_complete_multipartite({4, 4, 4});
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_count_exact(g));
}
BENCHMARK(BM_AutomorphismCount);
