#include <benchmark/benchmark.h>

#include "supersat/construct.hpp"
#include "supersat/rng.hpp"
#include "supersat/spectral.hpp"

using namespace supersat;

namespace {

Graph planted(int n, int r, uint64_t seed) {
    Rng rng(seed);
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    VertexPartition vp;
    Graph base = build_complete_multipartite(sizes, &vp);
    auto part = vp.part_of();
    auto edges = base.edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] == part[v] && rng.bernoulli(0.05)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

static void BM_SpectralRadiusTuran(benchmark::State& state) {
    Graph g = build_turan(static_cast<int>(state.range(0)), 3).graph;
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).rho);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralRadiusTuran)->Arg(30)->Arg(60)->Arg(120)->Arg(300)->Complexity();

static void BM_SpectralRadiusPlanted(benchmark::State& state) {
    Graph g = planted(static_cast<int>(state.range(0)), 3, 17);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).rho);
}
BENCHMARK(BM_SpectralRadiusPlanted)->Arg(60)->Arg(150)->Arg(300);

static void BM_Peel(benchmark::State& state) {
    // A graph with a guaranteed light tail: Turan plus a disjoint edge chain.
    Graph base = build_turan(static_cast<int>(state.range(0)), 3).graph;
    std::vector<Edge> edges = base.edges();
    int n = base.n();
    for (int i = 0; i < 4; ++i) edges.emplace_back(n + 2 * i, n + 2 * i + 1);
    Graph g(n + 8, std::move(edges));
    for (auto _ : state) benchmark::DoNotOptimize(peel(g, 0.5).length());
}
BENCHMARK(BM_Peel)->Arg(24)->Arg(48);

static void BM_PerturbationCheck(benchmark::State& state) {
    PerturbationSpec spec;
    spec.sizes = {100, 100, 100};
    spec.class_edges = 2;
    spec.cross_deletions = 1;
    spec.seed = 5;
    for (auto _ : state)
        benchmark::DoNotOptimize(check_perturbation_bound(spec).margin);
}
BENCHMARK(BM_PerturbationCheck);

BENCHMARK_MAIN();
