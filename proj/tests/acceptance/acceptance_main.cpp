// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "supersat/construct.hpp"
#include "supersat/counting.hpp"
#include "supersat/graph_io.hpp"
#include "supersat/harness.hpp"
#include "supersat/pattern.hpp"
#include "supersat/spectral.hpp"

using namespace supersat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

PatternProfile profile_of(const Graph& g, const std::string& name) {
    return build_pattern_profile(g, name);
}

// 1. Rademacher identity: c_bruteforce(n,K3) = floor(n/2), n = 4..12, and
//    c_exact(n,K3) = n/2 for even n.
Outcome criterion1() {
    Outcome o;
    PatternProfile k3 = profile_of(build_clique(3), "K3");
    for (long n = 4; n <= 12; ++n) {
        BigInt brute = c_bruteforce(n, k3);
        o.require(brute == BigInt(n / 2),
                  "c_bruteforce(" + std::to_string(n) + ",K3) != floor(n/2)");
        if (n % 2 == 0)
            o.require(c_exact(n, k3) == BigInt(n / 2),
                      "c_exact(" + std::to_string(n) + ",K3) != n/2");
    }
    return o;
}

// 2. Formula/oracle agreement on the full grid.
Outcome criterion2() {
    Outcome o;
    struct Row {
        const char* name;
        Graph f;
        std::vector<long> ns;
    };
    std::vector<Row> grid;
    grid.push_back({"K3", build_clique(3), {6, 8, 10, 12}});
    grid.push_back({"K4", build_clique(4), {6, 9, 12}});
    grid.push_back({"C5", build_cycle(5), {6, 8, 10}});
    grid.push_back({"kite", build_kite(), {6, 8, 10}});
    for (const auto& row : grid) {
        PatternProfile p = profile_of(row.f, row.name);
        for (long n : row.ns)
            o.require(c_exact(n, p) == c_bruteforce(n, p),
                      std::string(row.name) + " disagrees at n=" + std::to_string(n));
    }
    return o;
}

// 3. alpha_{K_{r+1}} = (1/r)^{r-1} exactly for r in 2..5.
Outcome criterion3() {
    Outcome o;
    for (int r = 2; r <= 5; ++r) {
        Rational alpha = alpha_exact(profile_of(build_clique(r + 1), "K"));
        Rational expected = Rational(BigInt(1), BigInt(r)).pow(r - 1);
        o.require(alpha == expected, "alpha mismatch at r=" + std::to_string(r));
    }
    return o;
}

// 4. Spectral anchors within 1e-9.
Outcome criterion4() {
    Outcome o;
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
    struct TC {
        int n, r;
    };
    for (TC t : {TC{6, 3}, TC{12, 3}, TC{12, 4}}) {
        double rho = spectral_radius(build_turan(t.n, t.r).graph).rho;
        o.require(close(rho, (1.0 - 1.0 / t.r) * t.n),
                  "rho(T_{" + std::to_string(t.n) + "," + std::to_string(t.r) + "})");
    }
    struct AB {
        int a, b;
    };
    for (AB t : {AB{2, 3}, AB{3, 3}, AB{4, 7}}) {
        double rho = spectral_radius(build_complete_multipartite({t.a, t.b})).rho;
        o.require(close(rho, std::sqrt(1.0 * t.a * t.b)),
                  "rho(K_{" + std::to_string(t.a) + "," + std::to_string(t.b) + "})");
    }
    return o;
}

// 5. Nikiforov exhaustive at m <= 9 for r = 2 (with equality classification)
//    and r = 3.
Outcome criterion5() {
    Outcome o;
    CampaignReport r2 = campaign_nikiforov(9, 2);
    o.require(r2.summary.pass, "triangle-free sweep failed (" +
                                   std::to_string(r2.summary.failures) + " failures)");
    CampaignReport r3 = campaign_nikiforov(9, 3);
    o.require(r3.summary.pass, "K4-free sweep failed");
    o.note(std::to_string(r2.summary.instances) + " triangle-free + " +
           std::to_string(r3.summary.instances) + " K4-free instances");
    return o;
}

// 6. Ning-Zhai exhaustive at m <= 9.
Outcome criterion6() {
    Outcome o;
    CampaignReport rep = campaign_ning_zhai(9);
    o.require(rep.summary.pass, std::to_string(rep.summary.failures) + " failures");
    o.note(std::to_string(rep.summary.instances) + " instances");
    return o;
}

// 7. Tightness construction for r=3, F=K4, n in {6,9,12,30,60}.
Outcome criterion7() {
    Outcome o;
    PatternProfile k4 = profile_of(build_clique(4), "K4");
    CampaignReport rep = campaign_tightness(3, k4, {6, 9, 12, 30, 60});
    o.require(rep.summary.pass, "strict margin or count identity failed");
    double min_margin = 1e9;
    for (const auto& rec : rep.records)
        min_margin = std::min(min_margin, rec["margin"].get<double>());
    o.note("min spectral margin " + std::to_string(min_margin));
    return o;
}

// 8. Peel property suite: 1000 hypothesis-satisfying seeded instances.
Outcome criterion8() {
    Outcome o;
    PeelCampaignSpec spec;
    spec.instances = 1000;
    spec.base_seed = 20240601;
    spec.a = 1.2;
    spec.epsilon = 0.5;
    CampaignReport rep = campaign_peel_properties(spec);
    o.require(rep.summary.pass && rep.summary.instances == 1000,
              std::to_string(rep.summary.failures) + " violations in " +
                  std::to_string(rep.summary.instances) + " instances");
    o.note(std::to_string(rep.summary.skipped) + " skipped (hypothesis not met)");
    return o;
}

// 9. Perturbation inequality: 50 seeded instances, sizes (100,100,100),
//    a1 + a2 <= 3.
Outcome criterion9() {
    Outcome o;
    static const int edits[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0},
                                   {0, 2}, {2, 1}, {1, 2}, {3, 0}, {0, 3}};
    double min_margin = 1e9;
    for (int i = 0; i < 50; ++i) {
        PerturbationSpec spec;
        spec.sizes = {100, 100, 100};
        spec.class_edges = edits[i % 10][0];
        spec.cross_deletions = edits[i % 10][1];
        spec.seed = 9000 + i;
        PerturbationReport rep = check_perturbation_bound(spec);
        o.require(rep.holds, "bound failed at seed " + std::to_string(spec.seed));
        min_margin = std::min(min_margin, rep.margin);
    }
    o.note("min margin " + std::to_string(min_margin));
    return o;
}

// 10. Lemma 2.2 sandwich over criterion 2's grid; exact evaluation. C5 fails
//     at n in {6,8,10} (the lemma is asymptotic) -- those are findings whose
//     presence is itself asserted.
Outcome criterion10() {
    Outcome o;
    struct Row {
        const char* name;
        Graph f;
        std::vector<long> ns;
        std::vector<long> expected_failures;
    };
    std::vector<Row> grid;
    grid.push_back({"K3", build_clique(3), {6, 8, 10, 12}, {}});
    grid.push_back({"K4", build_clique(4), {6, 9, 12}, {}});
    grid.push_back({"C5", build_cycle(5), {6, 8, 10}, {6, 8, 10}});
    grid.push_back({"kite", build_kite(), {6, 8, 10}, {}});
    for (const auto& row : grid) {
        PatternProfile p = profile_of(row.f, row.name);
        AlphaScanReport rep = alpha_residual_scan(p, row.ns);
        o.require(rep.sandwich_failures == row.expected_failures,
                  std::string(row.name) + ": unexpected sandwich outcome");
        for (long n : rep.sandwich_failures)
            o.note("finding: " + std::string(row.name) + " fails the sandwich at n=" +
                   std::to_string(n) + " (consistent with the asymptotic regime)");
    }
    return o;
}

// 11. Aut(F) * N_F(G) equals independently counted injections on the test
//     corpus with |G| <= 8.
Outcome criterion11() {
    Outcome o;
    std::vector<std::pair<std::string, Graph>> patterns = {
        {"K3", build_clique(3)}, {"K4", build_clique(4)}, {"C4", build_cycle(4)},
        {"C5", build_cycle(5)}, {"kite", build_kite()},   {"K13", build_star(3)},
        {"P4", build_path(4)}};
    std::vector<Graph> hosts;
    hosts.push_back(build_clique(4));
    hosts.push_back(build_turan_plus_edge(6, 2).graph);
    hosts.push_back(build_turan_plus_edge(6, 3).graph);
    hosts.push_back(build_complete_multipartite({2, 3}));
    hosts.push_back(build_cycle(8));
    hosts.push_back(build_turan_plus_edge(8, 4).graph);
    {
        std::vector<Edge> es = build_clique(4).edges();
        es.emplace_back(4, 5);
        hosts.push_back(Graph(6, es));
    }
    // Independent tuple-enumeration oracle.
    auto oracle = [](const Graph& g, const Graph& f) {
        std::vector<int> image(f.n(), -1);
        std::vector<char> used(g.n(), 0);
        long long count = 0;
        std::function<void(int)> rec = [&](int u) {
            if (u == f.n()) {
                ++count;
                return;
            }
            for (int v = 0; v < g.n(); ++v) {
                if (used[v]) continue;
                bool ok = true;
                for (int w : f.neighbors(u))
                    if (w < u && !g.has_edge(v, image[w])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                image[u] = v;
                used[v] = 1;
                rec(u + 1);
                used[v] = 0;
            }
        };
        rec(0);
        return count;
    };
    for (const auto& [name, f] : patterns) {
        PatternProfile p = profile_of(f, name);
        for (const Graph& g : hosts) {
            long long injections = oracle(g, p.F);
            o.require(p.aut * count_copies(g, p) == injections,
                      name + " injection identity failed on a host");
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Rademacher identity c(n,K3) = floor(n/2)", criterion1},
        {2, "formula/oracle agreement for c(n,F)", criterion2},
        {3, "alpha_{K_{r+1}} = (1/r)^{r-1} exactly", criterion3},
        {4, "spectral anchors for Turan and complete bipartite graphs", criterion4},
        {5, "Nikiforov bound exhaustive at m <= 9 with equality cases", criterion5},
        {6, "Ning-Zhai triangle count exhaustive at m <= 9", criterion6},
        {7, "tightness construction T*_{n,3} vs K4", criterion7},
        {8, "peel property suite, 1000 seeded instances", criterion8},
        {9, "perturbation inequality on 50 seeded instances", criterion9},
        {10, "Lemma 2.2 sandwich with asymptotic findings", criterion10},
        {11, "injection-count identity on the corpus", criterion11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL",
                    c.id, c.title, secs, o.detail.empty() ? "" : " -- ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
