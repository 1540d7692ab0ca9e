#include "supersat/pattern.hpp"

#include <algorithm>
#include <functional>

#include "supersat/canonical.hpp"
#include "supersat/construct.hpp"
#include "supersat/error.hpp"

namespace supersat {

namespace {

constexpr int kChiGuardrail = 16;
constexpr int kAutGuardrail = 12;

// Exact k-colorability by DFS over most-saturated vertices. New colors are
// introduced in order, which kills color-permutation symmetry.
bool colorable(const Graph& g, int k) {
    int n = g.n();
    std::vector<int> color(n, 0);  // 0 = uncolored
    std::function<bool(int)> dfs = [&](int colored) -> bool {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = 0;
            unsigned seen = 0;
            for (int w : g.neighbors(v))
                if (color[w] && !(seen >> color[w] & 1)) {
                    seen |= 1u << color[w];
                    ++sat;
                }
            if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.degree(v);
            }
        }
        int max_used = 0;
        for (int v = 0; v < n; ++v) max_used = std::max(max_used, color[v]);
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int w : g.neighbors(pick))
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[pick] = c;
            if (dfs(colored + 1)) return true;
            color[pick] = 0;
        }
        return false;
    };
    return dfs(0);
}

int greedy_clique_size(const Graph& g) {
    int best = g.n() > 0 ? 1 : 0;
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int s : order) {
        std::vector<int> clique{s};
        for (int v : order) {
            if (v == s) continue;
            bool all = true;
            for (int c : clique)
                if (!g.has_edge(v, c)) {
                    all = false;
                    break;
                }
            if (all) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int greedy_coloring_size(const Graph& g) {
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(g.n(), 0);
    int used = 0;
    for (int v : order) {
        unsigned taken = 0;
        for (int w : g.neighbors(v))
            if (color[w]) taken |= 1u << color[w];
        int c = 1;
        while (taken >> c & 1) ++c;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

}  // namespace

int chromatic_number(const Graph& f, bool override_guardrails) {
    Graph g = f.normalized();
    if (g.n() == 0) return f.n() > 0 ? 1 : 0;
    if (g.n() > kChiGuardrail && !override_guardrails)
        throw GuardrailError("chromatic number: more than 16 non-isolated vertices");
    int lb = std::max(2, greedy_clique_size(g));
    int ub = greedy_coloring_size(g);
    for (int k = lb; k < ub; ++k)
        if (colorable(g, k)) return k;
    return ub;
}

std::vector<Edge> good_edges(const Graph& f, bool override_guardrails) {
    int chi = chromatic_number(f, override_guardrails);
    std::vector<Edge> out;
    for (const auto& [u, v] : f.edges())
        if (chromatic_number(f.with_edge_removed(u, v), override_guardrails) == chi - 1)
            out.emplace_back(u, v);
    return out;
}

bool is_color_critical(const Graph& f, bool override_guardrails) {
    return !good_edges(f, override_guardrails).empty();
}

std::vector<ColoringProfile> enumerate_colorings(const Graph& f, Edge xy,
                                                 bool override_guardrails) {
    xy = make_edge(xy.first, xy.second);
    if (!f.has_edge(xy.first, xy.second))
        throw Error("enumerate_colorings: not an edge of F");
    int chi = chromatic_number(f, override_guardrails);
    int r = chi - 1;
    Graph removed = f.with_edge_removed(xy.first, xy.second);
    if (chromatic_number(removed, override_guardrails) != r)
        throw Error("enumerate_colorings: edge is not good");

    // Enumerate every proper r-coloring of F - xy over the non-isolated
    // vertices of F; along the way assert the pinning claim that x and y
    // always agree.
    std::vector<int> verts = f.support();
    std::vector<int> color(f.n(), 0);
    std::vector<ColoringProfile> out;
    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (idx == verts.size()) {
            if (color[xy.first] != color[xy.second])
                throw Error(
                    "good-edge classification violated: a proper r-coloring of "
                    "F-xy separates x and y");
            if (color[xy.first] != 1) return;
            ColoringProfile p;
            p.good_edge = xy;
            p.tau.assign(r, 0);
            for (int v : verts) {
                if (v == xy.first || v == xy.second) continue;
                ++p.tau[color[v] - 1];
            }
            p.assignment.assign(f.n(), 0);
            for (int v : verts) p.assignment[v] = color[v];
            out.push_back(std::move(p));
            return;
        }
        int v = verts[idx];
        for (int c = 1; c <= r; ++c) {
            bool ok = true;
            for (int w : removed.neighbors(v))
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            dfs(idx + 1);
            color[v] = 0;
        }
    };
    dfs(0);
    return out;
}

long long automorphism_count(const Graph& f, bool override_guardrails) {
    if (f.n() > kAutGuardrail && !override_guardrails)
        throw GuardrailError("automorphism count: more than 12 vertices");
    return automorphism_count_exact(f);
}

bool is_bipartite(const Graph& f, std::vector<int>* side) {
    std::vector<int> col(f.n(), -1);
    for (int s = 0; s < f.n(); ++s) {
        if (col[s] != -1 || f.degree(s) == 0) continue;
        col[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : f.neighbors(v)) {
                if (col[w] == -1) {
                    col[w] = 1 - col[v];
                    stack.push_back(w);
                } else if (col[w] == col[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = col;
    return true;
}

int beta_prime(const Graph& f, bool override_guardrails) {
    Graph g = f.normalized();
    if (!is_bipartite(g))
        throw Error("beta_prime: no independent covering exists (graph not bipartite)");
    if (g.n() > kChiGuardrail && !override_guardrails)
        throw GuardrailError("beta_prime: more than 16 non-isolated vertices");
    if (g.n() == 0) return 0;
    int n = g.n();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool ok = true;
        for (const auto& [u, v] : g.edges()) {
            bool iu = mask >> u & 1, iv = mask >> v & 1;
            if (iu && iv) {  // not independent
                ok = false;
                break;
            }
            if (!iu && !iv) {  // edge not covered
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

PatternProfile build_pattern_profile(const Graph& f, const std::string& name,
                                     bool override_guardrails) {
    PatternProfile p;
    p.F = f.normalized();
    p.name = name;
    p.f = p.F.n();
    if (p.f == 0) throw Error("pattern profile: graph has no edges");
    p.chi = chromatic_number(p.F, override_guardrails);
    p.r = p.chi - 1;
    p.good_edges = good_edges(p.F, override_guardrails);
    p.color_critical = !p.good_edges.empty();
    p.aut = automorphism_count(p.F, override_guardrails);
    for (const auto& e : p.good_edges)
        p.colorings.emplace(e, enumerate_colorings(p.F, e, override_guardrails));
    if (is_bipartite(p.F)) p.beta_prime = beta_prime(p.F, override_guardrails);
    return p;
}

std::optional<Graph> pattern_registry_lookup(const std::string& name) {
    if (name == "K3") return build_clique(3);
    if (name == "K4") return build_clique(4);
    if (name == "K5") return build_clique(5);
    if (name == "C4") return build_cycle(4);
    if (name == "C5") return build_cycle(5);
    if (name == "kite") return build_kite();
    if (name == "petersen") return build_petersen();
    auto parse_ints = [](const std::string& s) {
        std::vector<int> out;
        size_t i = 0;
        while (i < s.size()) {
            size_t j = s.find(',', i);
            if (j == std::string::npos) j = s.size();
            out.push_back(std::stoi(s.substr(i, j - i)));
            i = j + 1;
        }
        return out;
    };
    if (name.rfind("star:", 0) == 0) {
        auto v = parse_ints(name.substr(5));
        if (v.size() == 1) return build_star(v[0]);
    }
    if (name.rfind("Kab+e:", 0) == 0) {
        auto v = parse_ints(name.substr(6));
        if (v.size() == 2) return build_bipartite_plus_edge(v[0], v[1]);
    }
    return std::nullopt;
}

std::vector<std::string> pattern_registry_names() {
    return {"K3", "K4", "K5", "C4", "C5", "kite", "petersen", "star:k", "Kab+e:a,b"};
}

}  // namespace supersat
