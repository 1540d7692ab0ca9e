#include "supersat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "supersat/canonical.hpp"
#include "supersat/error.hpp"

namespace supersat {

namespace {

void enumerate_labeled(int max_n, int m,
                       const std::function<void(const Graph&)>& yield) {
    std::vector<Edge> pairs;
    for (int u = 0; u < max_n; ++u)
        for (int v = u + 1; v < max_n; ++v) pairs.emplace_back(u, v);
    int p = static_cast<int>(pairs.size());
    if (m > p) return;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<Edge> es;
        es.reserve(m);
        for (int i : idx) es.push_back(pairs[i]);
        yield(Graph(max_n, std::move(es)));
        int i = m - 1;
        while (i >= 0 && idx[i] == p - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct Rep {
    int n;
    std::vector<Edge> edges;
};

void enumerate_dedupe(int max_n, int m,
                      const std::function<void(const Graph&)>& yield) {
    // Level k holds one normalized representative per isomorphism class of
    // k-edge graphs, keyed by canonical form.
    std::map<std::string, Rep> level;
    level.emplace(canonical_form(Graph(0, {})), Rep{0, {}});
    for (int k = 0; k < m; ++k) {
        std::map<std::string, Rep> next;
        for (const auto& [form, rep] : level) {
            Graph g(rep.n, rep.edges);
            auto extend = [&](int nn, Edge e) {
                auto es = rep.edges;
                es.push_back(e);
                Graph h(nn, es);
                std::string f = canonical_form(h);
                if (!next.count(f)) next.emplace(std::move(f), Rep{nn, std::move(es)});
            };
            for (int u = 0; u < rep.n; ++u)
                for (int v = u + 1; v < rep.n; ++v)
                    if (!g.has_edge(u, v)) extend(rep.n, {u, v});
            if (rep.n + 1 <= max_n)
                for (int u = 0; u < rep.n; ++u) extend(rep.n + 1, {u, rep.n});
            if (rep.n + 2 <= max_n) extend(rep.n + 2, {rep.n, rep.n + 1});
        }
        level = std::move(next);
    }
    for (const auto& [form, rep] : level) yield(Graph(rep.n, rep.edges));
}

}  // namespace

void enumerate_graphs(const EnumerateOptions& opts,
                      const std::function<void(const Graph&)>& yield) {
    if (opts.max_n < 0 || opts.m < 0) throw Error("enumerate: negative parameters");
    if (!opts.override_guardrails && (opts.max_n > 10 || opts.m > 15))
        throw GuardrailError(
            "enumerate: guardrails are max_n <= 10 and m <= 15 (override to proceed)");
    if (opts.max_n > 62) throw Error("enumerate: max_n above 62 unsupported");
    if (opts.dedupe)
        enumerate_dedupe(opts.max_n, opts.m, yield);
    else
        enumerate_labeled(opts.max_n, opts.m, yield);
}

std::vector<Graph> enumerate_collect(const EnumerateOptions& opts) {
    std::vector<Graph> out;
    enumerate_graphs(opts, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace supersat
