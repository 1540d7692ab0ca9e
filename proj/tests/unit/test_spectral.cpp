#include <cmath>

#include "doctest.h"
#include "supersat/construct.hpp"
#include "supersat/enumerate.hpp"
#include "supersat/error.hpp"
#include "supersat/spectral.hpp"
#include "test_util.hpp"

using namespace supersat;

TEST_SUITE_BEGIN("spectral");

namespace {
Graph k4_plus_k2() {
    return test_util::disjoint_union(build_clique(4), Graph(2, {{0, 1}}));
}
}  // namespace

TEST_CASE("spectral radius anchors") {
    CHECK(spectral_radius(build_complete_multipartite({2, 3})).rho ==
          doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
    CHECK(spectral_radius(build_turan(6, 3).graph).rho ==
          doctest::Approx(4.0).epsilon(1e-9));
    CHECK(spectral_radius(build_path(3)).rho ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(spectral_radius(build_complete_multipartite({3, 3})).rho ==
          doctest::Approx(3.0).epsilon(1e-9));
    CHECK(spectral_radius(build_complete_multipartite({4, 7})).rho ==
          doctest::Approx(std::sqrt(28.0)).epsilon(1e-9));
    CHECK(spectral_radius(build_turan(12, 4).graph).rho ==
          doctest::Approx(9.0).epsilon(1e-9));
    CHECK(spectral_radius(build_cycle(6)).rho == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("result invariants") {
    SpectralResult res = spectral_radius(build_complete_multipartite({2, 3}));
    double norm = 0;
    for (double v : res.x) {
        CHECK(v >= 0);
        norm += v * v;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.residual <= 1e-10);
    CHECK(res.iterations > 0);
}

TEST_CASE("disconnected graphs pick the dominant component") {
    SpectralResult res = spectral_radius(k4_plus_k2());
    CHECK(res.rho == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(res.dominant_component == std::vector<int>{0, 1, 2, 3});
    CHECK(res.x[4] == 0.0);
    CHECK(res.x[5] == 0.0);

    // Tie: two K4s -> component with the smallest vertex index wins.
    Graph two = test_util::disjoint_union(build_clique(4), build_clique(4));
    CHECK(spectral_radius(two).dominant_component == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(spectral_radius(Graph(5, {})), Error);
    SpectralOptions starved;
    starved.max_iterations = 1;
    try {
        spectral_radius(build_path(5), starved);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best_rho > 0);
        CHECK(e.iterations == 1);
    }
}

TEST_CASE("spectral bounds on an enumerated corpus") {
    EnumerateOptions opts;
    opts.dedupe = true;
    for (int m = 1; m <= 6; ++m) {
        opts.max_n = 2 * m;
        opts.m = m;
        opts.override_guardrails = true;
        enumerate_graphs(opts, [&](const Graph& g) {
            double rho = spectral_radius(g).rho;
            CHECK(rho <= std::sqrt(2.0 * g.m()) + 1e-9);
            int max_deg = 0;
            for (int v = 0; v < g.n(); ++v) max_deg = std::max(max_deg, g.degree(v));
            CHECK(rho <= max_deg + 1e-9);
            // Max average degree over components is a lower bound.
            double mad = 0;
            for (const auto& comp : g.components()) {
                Graph h = g.induced(comp);
                mad = std::max(mad, 2.0 * h.m() / h.n());
            }
            CHECK(rho >= mad - 1e-9);
        });
    }
}

TEST_CASE("edge deletion monotonicity") {
    for (const Graph& g : {build_petersen(), build_turan_plus_edge(7, 3).graph,
                           test_util::gnp(9, 0.5, 42)}) {
        double rho = spectral_radius(g).rho;
        for (size_t i = 0; i < g.edges().size(); i += 3) {
            auto [u, v] = g.edges()[i];
            Graph h = g.with_edge_removed(u, v);
            if (h.empty()) continue;
            CHECK(spectral_radius(h).rho <= rho + 1e-9);
        }
    }
}

TEST_CASE("phi") {
    CHECK(phi(build_complete_multipartite({3, 3})) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(phi(build_clique(4)) ==
          doctest::Approx(3.0 / std::sqrt(6.0)).epsilon(1e-9));
    CHECK(phi(build_turan(6, 3).graph) ==
          doctest::Approx(4.0 / std::sqrt(12.0)).epsilon(1e-9));
    CHECK_THROWS_AS(phi(Graph(2, {})), Error);
}

TEST_CASE("light edges") {
    Graph k33 = build_complete_multipartite({3, 3});
    CHECK(light_edges(k33, spectral_radius(k33)).empty());

    Graph g = k4_plus_k2();
    auto lights = light_edges(g, spectral_radius(g));
    CHECK(lights == std::vector<Edge>{{4, 5}});

    Graph star = build_star(4);
    CHECK(light_edges(star, spectral_radius(star)).empty());
}

TEST_CASE("peel traces") {
    PeelTrace t1 = peel(build_complete_multipartite({3, 3}), 0.5);
    CHECK(t1.length() == 1);
    CHECK(t1.terminal_reason == TerminalReason::no_light_edges);
    CHECK(!t1.steps[0].removed.has_value());

    PeelTrace t2 = peel(k4_plus_k2(), 0.9);
    CHECK(t2.length() == 2);
    CHECK(t2.steps[0].removed == Edge{4, 5});
    CHECK(t2.steps[0].edge_count == 7);
    CHECK(t2.steps[1].edge_count == 6);
    CHECK(t2.terminal_reason == TerminalReason::no_light_edges);
    CHECK(t2.terminal.m() == 6);

    // floor(eps m) = 1 stops immediately with the cap, whatever the graph.
    PeelTrace t3 = peel(build_complete_multipartite({3, 3}), 0.12);
    CHECK(t3.length() == 1);
    CHECK(t3.terminal_reason == TerminalReason::step_cap);

    CHECK_THROWS_AS(peel(Graph(3, {}), 0.5), Error);
    CHECK_THROWS_AS(peel(build_clique(3), 1.5), Error);
}

TEST_CASE("peel step decay bound") {
    Graph g = test_util::disjoint_union(build_turan(12, 3).graph, Graph(2, {{0, 1}}));
    PeelTrace t = peel(g, 0.9);
    REQUIRE(t.length() == 2);
    for (int i = 0; i + 1 < t.length(); ++i)
        CHECK(t.steps[i].rho <=
              t.steps[i + 1].rho + 1.0 / (4.0 * std::sqrt(t.steps[i].edge_count)) +
                  1e-9);
}

TEST_CASE("long light tail peels one edge per round") {
    // T_{24,3} with five disjoint extra edges: the light tail goes first,
    // lexicographically, then the Turan core has no light edges.
    Graph base = build_turan(24, 3).graph;
    std::vector<Edge> edges = base.edges();
    for (int i = 0; i < 5; ++i) edges.emplace_back(24 + 2 * i, 25 + 2 * i);
    Graph g(34, std::move(edges));
    PeelTrace t = peel(g, 0.5);
    CHECK(t.length() == 6);
    CHECK(t.terminal_reason == TerminalReason::no_light_edges);
    for (int i = 0; i < 5; ++i) {
        REQUIRE(t.steps[i].removed.has_value());
        CHECK(*t.steps[i].removed == Edge{24 + 2 * i, 25 + 2 * i});
        CHECK(t.steps[i].edge_count == g.m() - i);
    }
    Lemma28Report rep = check_lemma28(t, 1.2);
    CHECK(rep.hypothesis_met);
    CHECK(rep.pass);

    // Trace invariant: every recorded product obeys the light-edge bound at
    // its own step, and e drops by exactly one per removal.
    for (int i = 0; i + 1 < t.length(); ++i) {
        CHECK(t.steps[i].product <=
              1.0 / (8.0 * std::sqrt(t.steps[i].edge_count)) + 1e-15);
        CHECK(t.steps[i + 1].edge_count == t.steps[i].edge_count - 1);
    }
}

TEST_CASE("slow spectral gap still converges") {
    Graph path = build_path(200);
    SpectralResult res = spectral_radius(path);
    double exact = 2.0 * std::cos(M_PI / 201.0);
    CHECK(res.rho == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("removing a light edge yields an eps-dense subgraph") {
    Graph g = k4_plus_k2();
    SpectralResult res = spectral_radius(g);
    auto lights = light_edges(g, res);
    REQUIRE(!lights.empty());
    Graph gp = g.with_edge_removed(lights[0].first, lights[0].second);
    CHECK(check_eps_dense(g, gp, 0.19, 3));
}

TEST_CASE("lemma 2.8 stepwise checks") {
    PeelTrace k33 = peel(build_complete_multipartite({3, 3}), 0.5);
    Lemma28Report r1 = check_lemma28(k33, 0.81);
    CHECK(r1.hypothesis_met);
    CHECK(r1.pass);

    Graph g = test_util::disjoint_union(build_turan(12, 3).graph, Graph(2, {{0, 1}}));
    Lemma28Report r2 = check_lemma28(peel(g, 0.9), 1.2);
    CHECK(r2.hypothesis_met);
    CHECK(r2.pass);
    CHECK(r2.min_margin_i >= 0);
    CHECK(r2.min_margin_ii >= 0);

    Lemma28Report r3 = check_lemma28(peel(build_cycle(6), 0.5), 0.81);
    CHECK(!r3.hypothesis_met);  // rho = 2 < sqrt(0.81*6)

    CHECK_THROWS_AS(check_lemma28(k33, 0.5), Error);
}

TEST_CASE("lemma 2.8(iii) terminal bounds") {
    // rho(K_{3,3}) = 3 = sqrt(m), so the rho-hypothesis cannot hold for any
    // a > 1; the four bounds themselves are still evaluated and hold.
    Graph k33 = build_complete_multipartite({3, 3});
    Lemma28iiiReport rep = check_lemma28_iii(k33, spectral_radius(k33), 1.5);
    CHECK(!rep.hypothesis_met);
    CHECK(rep.pass);
    CHECK(rep.checks.size() == 4);
    for (const auto& c : rep.checks) CHECK(c.pass);

    Graph k4 = build_clique(4);
    Lemma28iiiReport rep2 = check_lemma28_iii(k4, spectral_radius(k4), 1.4);
    CHECK(rep2.hypothesis_met);
    CHECK(rep2.pass);

    Graph g = k4_plus_k2();
    Lemma28iiiReport rep3 = check_lemma28_iii(g, spectral_radius(g), 1.2);
    CHECK(!rep3.hypothesis_met);  // has a light edge

    CHECK_THROWS_AS(check_lemma28_iii(k33, spectral_radius(k33), 0.9), Error);
}

TEST_CASE("epsilon-dense subgraphs") {
    Graph g = k4_plus_k2();
    Graph k4_padded(6, build_clique(4).edges());
    CHECK(check_eps_dense(g, k4_padded, 0.01, 3));
    CHECK(!check_eps_dense(g, g, 0.01, 3));  // zero deficit

    Graph k33 = build_complete_multipartite({3, 3});
    CHECK(!check_eps_dense(k33, k33.with_edge_removed(0, 3), 0.19, 2));

    Graph not_sub(6, {{0, 1}});
    CHECK_THROWS_AS(check_eps_dense(build_clique(3), Graph(3, {{0, 1}, {1, 2}}), 0.3, 2),
                    Error);  // epsilon out of range
    CHECK_THROWS_AS(check_eps_dense(k33, Graph(6, {{0, 1}}), 0.1, 2), Error);
}

TEST_CASE("perturbation bound, mode (i)") {
    PerturbationSpec spec;
    spec.sizes = {100, 100, 100};
    spec.class_edges = 1;
    spec.cross_deletions = 0;
    spec.seed = 1;
    PerturbationReport rep = check_perturbation_bound(spec);
    CHECK(rep.mode == 1);
    CHECK(!rep.hypothesis_met);  // paper-scale smallness fails at n = 300
    CHECK(rep.holds);
    CHECK(rep.rho_k == doctest::Approx(200.0).epsilon(1e-9));

    spec.class_edges = 0;
    PerturbationReport rep0 = check_perturbation_bound(spec);
    CHECK(rep0.hypothesis_met);
    CHECK(rep0.holds);
    CHECK(rep0.lhs == 0.0);  // identical graphs solve identically
}

TEST_CASE("perturbation bound, mode (ii)") {
    PerturbationSpec spec;
    spec.sizes = {102, 100, 98};
    spec.k = 2;
    spec.seed = 3;
    PerturbationReport rep = check_perturbation_bound(spec);
    CHECK(rep.mode == 2);
    CHECK(rep.holds);
    CHECK(rep.rhs > rep.rho_g);
}

TEST_SUITE_END();
