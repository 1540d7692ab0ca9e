#include <algorithm>

#include "doctest.h"
#include "supersat/canonical.hpp"
#include "supersat/construct.hpp"
#include "supersat/error.hpp"
#include "supersat/pattern.hpp"

using namespace supersat;

TEST_SUITE_BEGIN("pattern");

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(build_clique(4)) == 4);
    CHECK(chromatic_number(build_cycle(5)) == 3);
    CHECK(chromatic_number(build_petersen()) == 3);
    CHECK(chromatic_number(build_cycle(6)) == 2);
    CHECK(chromatic_number(build_kite()) == 3);
    CHECK(chromatic_number(build_complete_multipartite({3, 3})) == 2);
    CHECK(chromatic_number(Graph(2, {{0, 1}})) == 2);
    CHECK(chromatic_number(Graph(3, {})) == 1);
    CHECK(chromatic_number(Graph(0, {})) == 0);
    CHECK_THROWS_AS(chromatic_number(build_cycle(17)), GuardrailError);
    CHECK(chromatic_number(build_cycle(17), true) == 3);
}

TEST_CASE("good edges") {
    CHECK(good_edges(build_clique(4)).size() == 6);
    CHECK(good_edges(build_kite()) == std::vector<Edge>{{0, 2}});
    CHECK(good_edges(build_cycle(6)).empty());
    CHECK(good_edges(build_cycle(5)).size() == 5);
    CHECK(good_edges(build_clique(3)).size() == 3);
}

TEST_CASE("chi drops by at most one per edge") {
    for (const Graph& f : {build_clique(4), build_kite(), build_petersen(),
                           build_cycle(6), build_complete_multipartite({2, 2, 2})}) {
        int chi = chromatic_number(f);
        for (const auto& [u, v] : f.edges()) {
            int chi_minus = chromatic_number(f.with_edge_removed(u, v));
            CHECK(chi_minus >= chi - 1);
            CHECK(chi_minus <= chi);
        }
    }
}

TEST_CASE("color criticality") {
    CHECK(is_color_critical(build_clique(3)));
    CHECK(!is_color_critical(build_cycle(6)));
    CHECK(is_color_critical(build_kite()));
    CHECK(is_color_critical(Graph(2, {{0, 1}})));  // K2, r = 1
    CHECK(!is_color_critical(build_petersen()));
}

TEST_CASE("coloring enumeration matches the hand-counted profiles") {
    auto k3 = enumerate_colorings(build_clique(3), {0, 1});
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].tau == std::vector<int>{0, 1});

    auto k4 = enumerate_colorings(build_clique(4), {0, 1});
    REQUIRE(k4.size() == 2);
    for (const auto& p : k4) CHECK(p.tau == std::vector<int>{0, 1, 1});

    auto c5 = enumerate_colorings(build_cycle(5), {0, 4});
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].tau == std::vector<int>{1, 2});

    auto kite = enumerate_colorings(build_kite(), {0, 2});
    REQUIRE(kite.size() == 1);
    CHECK(kite[0].tau == std::vector<int>{0, 2});

    CHECK_THROWS_AS(enumerate_colorings(build_kite(), {0, 1}), Error);  // not good
}

TEST_CASE("coloring profiles are proper and pinned") {
    Graph f = build_cycle(5);
    for (const auto& profile : enumerate_colorings(f, {0, 1})) {
        CHECK(profile.assignment[0] == 1);
        CHECK(profile.assignment[1] == 1);
        Graph removed = f.with_edge_removed(0, 1);
        int mono_removed = 0, mono_full = 0;
        for (const auto& [u, v] : removed.edges())
            if (profile.assignment[u] == profile.assignment[v]) ++mono_removed;
        for (const auto& [u, v] : f.edges())
            if (profile.assignment[u] == profile.assignment[v]) ++mono_full;
        CHECK(mono_removed == 0);
        CHECK(mono_full == 1);  // exactly xy itself
        int tau_sum = 0;
        for (int t : profile.tau) tau_sum += t;
        CHECK(tau_sum == f.n() - 2);
    }
}

TEST_CASE("profiles closed under permutations of colors 2..r") {
    Graph f = build_clique(4);
    auto profiles = enumerate_colorings(f, {0, 1});
    // Swap colors 2 and 3 in each profile; the image must be listed too.
    for (const auto& p : profiles) {
        std::vector<int> swapped = p.assignment;
        for (int& c : swapped) {
            if (c == 2)
                c = 3;
            else if (c == 3)
                c = 2;
        }
        bool found = false;
        for (const auto& q : profiles) found = found || q.assignment == swapped;
        CHECK(found);
    }
}

TEST_CASE("automorphism counts via the pattern wrapper") {
    CHECK(automorphism_count(build_clique(3)) == 6);
    CHECK(automorphism_count(build_cycle(4)) == 8);
    CHECK(automorphism_count(build_kite()) == 4);  // K4 minus an edge
    CHECK(automorphism_count(build_petersen()) == 120);
    CHECK_THROWS_AS(automorphism_count(build_cycle(13)), GuardrailError);
    CHECK(automorphism_count(build_cycle(13), true) == 26);
}

TEST_CASE("beta prime") {
    CHECK(beta_prime(build_star(3)) == 1);
    CHECK(beta_prime(build_cycle(4)) == 2);
    CHECK(beta_prime(build_path(4)) == 2);
    CHECK(beta_prime(build_cycle(6)) == 3);
    CHECK(beta_prime(build_complete_multipartite({3, 3})) == 3);
    CHECK(beta_prime(Graph(2, {{0, 1}})) == 1);
    CHECK_THROWS_AS(beta_prime(build_clique(3)), Error);
    CHECK_THROWS_AS(beta_prime(build_cycle(5)), Error);
}

TEST_CASE("beta prime bounded by either side") {
    for (const Graph& f : {build_cycle(8), build_path(7), build_star(4),
                           build_complete_multipartite({4, 2})}) {
        std::vector<int> side;
        REQUIRE(is_bipartite(f, &side));
        int s0 = 0, s1 = 0;
        for (int v = 0; v < f.n(); ++v) {
            if (f.degree(v) == 0) continue;
            (side[v] == 0 ? s0 : s1)++;
        }
        int bp = beta_prime(f);
        CHECK(bp <= std::min(s0, s1));
        CHECK(bp >= 1);
    }
}

TEST_CASE("pattern profile assembly") {
    PatternProfile kite = build_pattern_profile(build_kite(), "kite");
    CHECK(kite.f == 4);
    CHECK(kite.chi == 3);
    CHECK(kite.r == 2);
    CHECK(kite.aut == 4);
    CHECK(kite.color_critical);
    CHECK(kite.good_edges.size() == 1);
    CHECK(kite.colorings.at({0, 2}).size() == 1);
    CHECK(!kite.beta_prime.has_value());

    PatternProfile c4 = build_pattern_profile(build_cycle(4), "C4");
    CHECK(c4.chi == 2);
    CHECK(!c4.color_critical);
    CHECK(c4.beta_prime == 2);

    // Isolated vertices are dropped before profiling.
    Graph padded(6, build_kite().edges());
    CHECK(build_pattern_profile(padded).f == 4);

    CHECK_THROWS_AS(build_pattern_profile(Graph(3, {})), Error);
}

TEST_CASE("registry") {
    for (const auto& name : {"K3", "K4", "K5", "C4", "C5", "kite", "petersen"})
        CHECK(pattern_registry_lookup(name).has_value());
    CHECK(is_isomorphic(*pattern_registry_lookup("star:4"), build_star(4)));
    CHECK(pattern_registry_lookup("Kab+e:2,3")->m() == 7);
    CHECK(!pattern_registry_lookup("noSuchThing").has_value());
    CHECK(pattern_registry_names().size() == 9);
}

TEST_SUITE_END();
