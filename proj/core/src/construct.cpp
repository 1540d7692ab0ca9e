#include "supersat/construct.hpp"

#include <algorithm>
#include <numeric>

#include "supersat/error.hpp"

namespace supersat {

static std::vector<int> turan_sizes(int n, int r) {
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

Graph build_complete_multipartite(const std::vector<int>& sizes,
                                  VertexPartition* partition) {
    if (sizes.empty()) throw Error("complete multipartite: empty size list");
    for (int s : sizes)
        if (s <= 0) throw Error("complete multipartite: part sizes must be positive");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    VertexPartition vp;
    vp.universe = n;
    int next = 0;
    for (int s : sizes) {
        std::vector<int> part(s);
        std::iota(part.begin(), part.end(), next);
        next += s;
        vp.parts.push_back(std::move(part));
    }
    std::vector<Edge> es;
    for (size_t p = 0; p < vp.parts.size(); ++p)
        for (size_t q = p + 1; q < vp.parts.size(); ++q)
            for (int u : vp.parts[p])
                for (int v : vp.parts[q]) es.push_back(make_edge(u, v));
    if (partition) *partition = vp;
    return Graph(n, std::move(es));
}

TuranGraph build_turan(int n, int r) {
    if (r < 1 || r > n) throw Error("turan: need 1 <= r <= n");
    VertexPartition vp;
    Graph g = build_complete_multipartite(turan_sizes(n, r), &vp);
    return {std::move(g), std::move(vp)};
}

TuranPlusEdge build_turan_plus_edge_in_part(int n, int r, int part) {
    TuranGraph t = build_turan(n, r);
    if (part < 0 || part >= r) throw Error("turan plus edge: bad part index");
    const auto& p = t.partition.parts[part];
    if (p.size() < 2) throw Error("turan plus edge: part has no internal pair");
    Edge added = make_edge(p[0], p[1]);
    Graph g = t.graph.with_edge_added(added.first, added.second);
    return {std::move(g), std::move(t.partition), added};
}

TuranPlusEdge build_turan_plus_edge(int n, int r) {
    if (r < 1 || r > n) throw Error("turan: need 1 <= r <= n");
    if (r == n) throw Error("turan plus edge: every part is a singleton");
    // Sizes are laid out descending, so the last part is a smallest one.
    return build_turan_plus_edge_in_part(n, r, r - 1);
}

Graph build_bipartite_plus_edge(int a, int b) {
    if (a < 2) throw Error("bipartite plus edge: class of size a needs a >= 2");
    if (b < 1) throw Error("bipartite plus edge: need b >= 1");
    Graph g = build_complete_multipartite({a, b});
    return g.with_edge_added(0, 1);
}

Graph build_clique(int k) {
    if (k < 1) throw Error("clique: need k >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
    return Graph(k, std::move(es));
}

Graph build_cycle(int k) {
    if (k < 3) throw Error("cycle: need k >= 3");
    std::vector<Edge> es;
    for (int v = 0; v < k; ++v) es.push_back(make_edge(v, (v + 1) % k));
    return Graph(k, std::move(es));
}

Graph build_path(int k) {
    if (k < 1) throw Error("path: need k >= 1");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < k; ++v) es.emplace_back(v, v + 1);
    return Graph(k, std::move(es));
}

Graph build_star(int leaves) {
    if (leaves < 1) throw Error("star: need at least one leaf");
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph(leaves + 1, std::move(es));
}

Graph build_kite() {
    return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

Graph build_petersen() {
    std::vector<Edge> es;
    for (int v = 0; v < 5; ++v) {
        es.push_back(make_edge(v, (v + 1) % 5));      // outer C5
        es.push_back(make_edge(5 + v, 5 + (v + 2) % 5));  // inner pentagram
        es.emplace_back(v, 5 + v);                    // spokes
    }
    return Graph(10, std::move(es));
}

Graph build_family(const GraphFamilySpec& spec) {
    const auto& p = spec.params;
    auto need = [&](size_t k, const char* what) {
        if (p.size() != k) throw Error(std::string("family ") + what + ": expected " +
                                       std::to_string(k) + " parameter(s)");
    };
    switch (spec.kind) {
        case FamilyKind::turan:
            need(2, "turan");
            return build_turan(p[0], p[1]).graph;
        case FamilyKind::turan_plus_edge:
            need(2, "turan-plus-edge");
            return build_turan_plus_edge(p[0], p[1]).graph;
        case FamilyKind::complete_multipartite:
            return build_complete_multipartite(p);
        case FamilyKind::complete_bipartite_plus_edge:
            need(2, "complete-bipartite-plus-edge");
            return build_bipartite_plus_edge(p[0], p[1]);
        case FamilyKind::star:
            need(1, "star");
            return build_star(p[0]);
        case FamilyKind::cycle:
            need(1, "cycle");
            return build_cycle(p[0]);
        case FamilyKind::clique:
            need(1, "clique");
            return build_clique(p[0]);
        case FamilyKind::kite:
            need(0, "kite");
            return build_kite();
    }
    throw Error("family: unknown kind");
}

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "turan") return FamilyKind::turan;
    if (name == "turan-plus-edge") return FamilyKind::turan_plus_edge;
    if (name == "complete-multipartite") return FamilyKind::complete_multipartite;
    if (name == "complete-bipartite-plus-edge")
        return FamilyKind::complete_bipartite_plus_edge;
    if (name == "star") return FamilyKind::star;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "clique") return FamilyKind::clique;
    if (name == "kite") return FamilyKind::kite;
    throw Error("unknown graph family: " + name);
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::turan: return "turan";
        case FamilyKind::turan_plus_edge: return "turan-plus-edge";
        case FamilyKind::complete_multipartite: return "complete-multipartite";
        case FamilyKind::complete_bipartite_plus_edge:
            return "complete-bipartite-plus-edge";
        case FamilyKind::star: return "star";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::clique: return "clique";
        case FamilyKind::kite: return "kite";
    }
    return "?";
}

}  // namespace supersat
