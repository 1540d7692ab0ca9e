#include "doctest.h"
#include "supersat/construct.hpp"
#include "supersat/error.hpp"
#include "supersat/graph.hpp"

using namespace supersat;

TEST_SUITE_BEGIN("graph");

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(-1, {}), Error);
    Graph g(4, {{2, 0}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(1, 2));
}

TEST_CASE("adjacency is symmetric and consistent with edges") {
    Graph g = build_petersen();
    int degree_sum = 0;
    for (int v = 0; v < g.n(); ++v) {
        degree_sum += g.degree(v);
        for (int w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(degree_sum == 2 * g.m());
}

TEST_CASE("turan graphs") {
    auto t63 = build_turan(6, 3);
    CHECK(t63.graph.m() == 12);
    CHECK(t63.partition.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});

    auto t73 = build_turan(7, 3);
    CHECK(t73.graph.m() == 16);
    CHECK(t73.partition.parts[0].size() == 3);
    CHECK(t73.partition.parts[1].size() == 2);
    CHECK(t73.partition.parts[2].size() == 2);

    auto t51 = build_turan(5, 1);
    CHECK(t51.graph.m() == 0);
    CHECK(t51.graph.n() == 5);

    CHECK_THROWS_AS(build_turan(3, 4), Error);
    CHECK_THROWS_AS(build_turan(3, 0), Error);
}

TEST_CASE("turan edge count bound, equality iff r divides n") {
    for (int n = 1; n <= 30; ++n)
        for (int r = 1; r <= n; ++r) {
            long long e = build_turan(n, r).graph.m();
            // 2 r e <= (r-1) n^2, exactly when r | n.
            long long lhs = 2LL * r * e, rhs = 1LL * (r - 1) * n * n;
            CHECK(lhs <= rhs);
            CHECK((lhs == rhs) == (n % r == 0));
        }
}

TEST_CASE("turan plus edge") {
    auto t62 = build_turan_plus_edge(6, 2);
    CHECK(t62.graph.m() == 10);
    auto t63 = build_turan_plus_edge(6, 3);
    CHECK(t63.graph.m() == 13);
    CHECK_THROWS_AS(build_turan_plus_edge(3, 3), Error);

    // Exactly one intra-part pair.
    auto part_of = t63.partition.part_of();
    int intra = 0;
    for (const auto& [u, v] : t63.graph.edges())
        if (part_of[u] == part_of[v]) ++intra;
    CHECK(intra == 1);
    CHECK(part_of[t63.added.first] == part_of[t63.added.second]);

    // Unbalanced: the added edge goes to a smallest part.
    auto t73 = build_turan_plus_edge(7, 3);
    CHECK(t73.partition.parts[part_of[0] == 0 ? 2 : 2].size() == 2);
    auto p73 = t73.partition.part_of();
    CHECK(t73.partition.parts[p73[t73.added.first]].size() == 2);
}

TEST_CASE("complete multipartite") {
    Graph g = build_complete_multipartite({2, 2, 2});
    CHECK(g.m() == 12);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
    CHECK(build_complete_multipartite({3, 3}).m() == 9);
    CHECK(build_complete_multipartite({1, 1, 1, 1}).m() == 6);
    CHECK_THROWS_AS(build_complete_multipartite({}), Error);
    CHECK_THROWS_AS(build_complete_multipartite({2, 0}), Error);
}

TEST_CASE("bipartite plus edge") {
    Graph kite = build_bipartite_plus_edge(2, 2);
    CHECK(kite.m() == 5);
    CHECK(build_bipartite_plus_edge(2, 3).m() == 7);
    CHECK_THROWS_AS(build_bipartite_plus_edge(1, 4), Error);
}

TEST_CASE("family spec dispatch") {
    GraphFamilySpec spec{FamilyKind::cycle, {5}};
    CHECK(build_family(spec).m() == 5);
    CHECK(parse_family_kind("turan-plus-edge") == FamilyKind::turan_plus_edge);
    CHECK_THROWS_AS(parse_family_kind("petersen"), Error);
    CHECK_THROWS_AS(build_family({FamilyKind::turan, {6}}), Error);
}

TEST_CASE("partition validation") {
    VertexPartition vp;
    vp.universe = 4;
    vp.parts = {{0, 1}, {2}};
    vp.validate();
    auto part_of = vp.part_of();
    CHECK(part_of == std::vector<int>{0, 0, 1, -1});
    vp.parts = {{0, 1}, {1}};
    CHECK_THROWS_AS(vp.validate(), Error);
}

TEST_CASE("normalize and induced") {
    Graph g(6, {{1, 3}, {3, 5}});
    std::vector<int> old_labels;
    Graph h = g.normalized(&old_labels);
    CHECK(h.n() == 3);
    CHECK(old_labels == std::vector<int>{1, 3, 5});
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    Graph sub = build_clique(4).induced({0, 2, 3});
    CHECK(sub.m() == 3);
}

TEST_CASE("components ordered by least vertex") {
    Graph g(7, {{4, 5}, {0, 2}, {2, 6}});
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 2, 6});
    CHECK(comps[1] == std::vector<int>{4, 5});
}

TEST_CASE("complete multipartite recognition") {
    auto parts = complete_multipartite_parts(build_complete_multipartite({3, 2, 2}));
    REQUIRE(parts.has_value());
    CHECK(parts->size() == 3);
    CHECK((*parts)[0].size() == 3);

    // kite = K4 minus an edge = K_{2,1,1}
    auto kite_parts = complete_multipartite_parts(build_kite());
    REQUIRE(kite_parts.has_value());
    CHECK(kite_parts->size() == 3);
    CHECK((*kite_parts)[0] == std::vector<int>{1, 3});
    CHECK(complete_multipartite_parts(build_path(4)) == std::nullopt);
    CHECK(complete_multipartite_parts(build_cycle(5)) == std::nullopt);
    CHECK(complete_multipartite_parts(build_cycle(6)) == std::nullopt);

    CHECK(is_complete_bipartite(build_complete_multipartite({3, 3})));
    CHECK(is_complete_bipartite(build_star(3)));
    CHECK(is_complete_bipartite(Graph(2, {{0, 1}})));  // K_{1,1}
    CHECK(!is_complete_bipartite(build_clique(3)));
    CHECK(!is_complete_bipartite(build_cycle(5)));
    // Isolated vertices are disregarded.
    Graph star_iso(6, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_complete_bipartite(star_iso));

    int r = 0;
    CHECK(is_regular_complete_multipartite(build_complete_multipartite({2, 2, 2}), &r));
    CHECK(r == 3);
    CHECK(is_regular_complete_multipartite(build_clique(3), &r));
    CHECK(r == 3);
    CHECK(!is_regular_complete_multipartite(build_complete_multipartite({3, 2})));
}

TEST_CASE("complement involution") {
    Graph g = build_kite();
    CHECK(g.complement().complement() == g);
    CHECK(g.complement().m() == 6 - g.m());
}

TEST_SUITE_END();
