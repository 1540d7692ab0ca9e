#include "supersat/stability.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "supersat/error.hpp"
#include "supersat/rng.hpp"

namespace supersat {

long long edit_distance(const Graph& g, const Graph& h,
                        const std::vector<int>& identification) {
    if (static_cast<int>(identification.size()) != h.n())
        throw Error("edit_distance: identification must map every vertex of H");
    std::vector<char> hit(g.n(), 0);
    for (int v : identification) {
        if (v < 0 || v >= g.n())
            throw Error("edit_distance: identification image out of range");
        if (hit[v]) throw Error("edit_distance: identification not injective");
        hit[v] = 1;
    }
    std::set<Edge> mapped;
    for (const auto& [u, v] : h.edges())
        mapped.insert(make_edge(identification[u], identification[v]));
    long long d = 0;
    for (const auto& e : g.edges())
        if (!mapped.count(e)) ++d;
    for (const auto& e : mapped)
        if (!g.has_edge(e.first, e.second)) ++d;
    return d;
}

namespace {

// Distance realized by an assignment (part index per vertex, -1 = out):
// G-edges inside a part or touching an out vertex, plus absent cross pairs
// between assigned vertices.
long long assignment_distance(const Graph& g, const std::vector<int>& part) {
    long long d = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool edge = g.has_edge(u, v);
            if (part[u] == -1 || part[v] == -1) {
                if (edge) ++d;
            } else if (part[u] == part[v]) {
                if (edge) ++d;
            } else {
                if (!edge) ++d;
            }
        }
    return d;
}

bool near_equal_sizes(const std::vector<int>& part, int r) {
    std::vector<int> size(r, 0);
    for (int p : part)
        if (p >= 0) ++size[p];
    auto [lo, hi] = std::minmax_element(size.begin(), size.end());
    return *hi - *lo <= 1;
}

// Exhaustive search over assignments with first-use part symmetry pruning
// and incremental branch-and-bound on the partial distance.
class ExactPartitionSearch {
public:
    ExactPartitionSearch(const Graph& g, int r, bool near_equal)
        : g_(g), r_(r), near_equal_(near_equal), part_(g.n(), -1) {}

    std::pair<long long, std::vector<int>> run() {
        best_ = assignment_distance(g_, part_);  // everything out
        best_part_ = part_;
        dfs(0, 0, 0);
        return {best_, best_part_};
    }

private:
    void dfs(int v, long long partial, int parts_used) {
        if (partial >= best_) return;
        if (v == g_.n()) {
            if (near_equal_ && !near_equal_sizes(part_, r_)) return;
            if (partial < best_ ||
                (partial == best_ && part_ < best_part_)) {
                best_ = partial;
                best_part_ = part_;
            }
            return;
        }
        int limit = std::min(r_ - 1, parts_used);  // first-use ordering
        for (int p = -1; p <= limit; ++p) {
            long long add = 0;
            for (int u = 0; u < v; ++u) {
                bool edge = g_.has_edge(u, v);
                if (p == -1 || part_[u] == -1) {
                    if (edge) ++add;
                } else if (part_[u] == p) {
                    if (edge) ++add;
                } else {
                    if (!edge) ++add;
                }
            }
            part_[v] = p;
            dfs(v + 1, partial + add, std::max(parts_used, p + 1));
            part_[v] = -1;
        }
    }

    const Graph& g_;
    int r_;
    bool near_equal_;
    std::vector<int> part_;
    long long best_ = 0;
    std::vector<int> best_part_;
};

// Multi-start first-improvement search over relocations and pair swaps.
// Swaps keep part sizes fixed, so balanced assignments stay explorable when
// near-equal sizes are required; relocations are filtered for feasibility.
// Starts run on independent workers; the reduction (min distance, then
// lexicographically smallest witness) is schedule-independent.
std::pair<long long, std::vector<int>> local_search(const Graph& g, int r,
                                                    bool near_equal,
                                                    const LocalSearchOptions& opts) {
    const int n = g.n();
    auto pair_cost = [&](int pu, int pv, bool edge) -> long long {
        if (pu == -1 || pv == -1 || pu == pv) return edge ? 1 : 0;
        return edge ? 0 : 1;
    };
    auto one_start = [&](int start) -> std::pair<long long, std::vector<int>> {
        Rng rng(opts.seed + start);
        std::vector<int> part(n);
        // Round-robin over a random vertex order: parts near-equal by deal.
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.next_below(i + 1)]);
        for (int i = 0; i < n; ++i) part[order[i]] = i % r;
        std::vector<int> size(r, 0);
        for (int p : part) ++size[p];

        long long cur = assignment_distance(g, part);
        long long cap = static_cast<long long>(opts.non_improving_cap_per_n) * n;
        long long stale = 0;
        while (stale < cap) {
            ++stale;
            if (rng.next() & 1) {  // relocation
                int v = static_cast<int>(rng.next_below(n));
                int from = part[v];
                int to = static_cast<int>(rng.next_below(r + 1)) - 1;  // -1 = out
                if (to == from) continue;
                if (near_equal) {
                    std::vector<int> s = size;
                    if (from >= 0) --s[from];
                    if (to >= 0) ++s[to];
                    auto [lo, hi] = std::minmax_element(s.begin(), s.end());
                    if (*hi - *lo > 1) continue;
                }
                long long delta = 0;
                for (int u = 0; u < n; ++u) {
                    if (u == v) continue;
                    bool edge = g.has_edge(u, v);
                    delta += pair_cost(to, part[u], edge) -
                             pair_cost(from, part[u], edge);
                }
                if (delta < 0) {
                    part[v] = to;
                    if (from >= 0) --size[from];
                    if (to >= 0) ++size[to];
                    cur += delta;
                    stale = 0;
                }
            } else {  // swap assignments of two vertices (sizes unchanged)
                if (n < 2) continue;
                int u = static_cast<int>(rng.next_below(n));
                int v = static_cast<int>(rng.next_below(n - 1));
                if (v >= u) ++v;
                if (part[u] == part[v]) continue;
                long long delta = 0;
                for (int w = 0; w < n; ++w) {
                    if (w == u || w == v) continue;
                    bool eu = g.has_edge(u, w), ev = g.has_edge(v, w);
                    delta += pair_cost(part[v], part[w], eu) -
                             pair_cost(part[u], part[w], eu);
                    delta += pair_cost(part[u], part[w], ev) -
                             pair_cost(part[v], part[w], ev);
                }
                if (delta < 0) {
                    std::swap(part[u], part[v]);
                    cur += delta;
                    stale = 0;
                }
            }
        }
        return {cur, part};
    };

    std::vector<std::pair<long long, std::vector<int>>> results(opts.starts);
    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::min<int>(opts.starts, hw > 0 ? static_cast<int>(hw) : 1);
    if (workers <= 1) {
        for (int s = 0; s < opts.starts; ++s) results[s] = one_start(s);
    } else {
        std::atomic<int> next{0};
        auto work = [&] {
            int s;
            while ((s = next.fetch_add(1)) < opts.starts) results[s] = one_start(s);
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    long long best = -1;
    std::vector<int> best_part;
    for (const auto& [cur, part] : results) {
        if (best < 0 || cur < best || (cur == best && part < best_part)) {
            best = cur;
            best_part = part;
        }
    }
    return {best, best_part};
}

DistanceResult make_result(const Graph& g, int r, long long distance,
                           const std::vector<int>& part, DistanceMethod method,
                           std::string target) {
    DistanceResult res;
    res.distance = distance;
    res.method = method;
    res.target = std::move(target);
    res.witness.universe = g.n();
    res.witness.parts.assign(r, {});
    for (int v = 0; v < g.n(); ++v)
        if (part[v] >= 0) res.witness.parts[part[v]].push_back(v);
    return res;
}

}  // namespace

long long DistanceResult::recompute(const Graph& g, bool near_equal_required) const {
    std::vector<int> part(g.n(), -1);
    for (size_t p = 0; p < witness.parts.size(); ++p)
        for (int v : witness.parts[p]) part[v] = static_cast<int>(p);
    if (near_equal_required && !near_equal_sizes(part, witness.r()))
        throw Error("distance witness violates near-equal part sizes");
    return assignment_distance(g, part);
}

DistanceResult distance_to_turan(const Graph& g, int r, DistanceMethod mode,
                                 const LocalSearchOptions& opts,
                                 bool override_guardrails) {
    if (r < 1) throw Error("distance_to_turan: r must be >= 1");
    std::string target = "turan(r=" + std::to_string(r) + ")";
    if (mode == DistanceMethod::exact) {
        if (g.n() > 12 && !override_guardrails)
            throw GuardrailError("distance_to_turan: exact mode guardrail is 12 vertices");
        auto [d, part] = ExactPartitionSearch(g, r, /*near_equal=*/true).run();
        return make_result(g, r, d, part, DistanceMethod::exact, target);
    }
    auto [d, part] = local_search(g, r, /*near_equal=*/true, opts);
    return make_result(g, r, d, part, DistanceMethod::local_search_upper_bound, target);
}

DistanceResult distance_to_bipartite(const Graph& g, DistanceMethod mode,
                                     const LocalSearchOptions& opts,
                                     bool override_guardrails) {
    if (mode == DistanceMethod::exact) {
        if (g.n() > 14 && !override_guardrails)
            throw GuardrailError(
                "distance_to_bipartite: exact mode guardrail is 14 vertices");
        auto [d, part] = ExactPartitionSearch(g, 2, /*near_equal=*/false).run();
        return make_result(g, 2, d, part, DistanceMethod::exact, "bipartite");
    }
    auto [d, part] = local_search(g, 2, /*near_equal=*/false, opts);
    return make_result(g, 2, d, part, DistanceMethod::local_search_upper_bound,
                       "bipartite");
}

}  // namespace supersat
