#include "supersat/graph.hpp"

#include <algorithm>
#include <string>

#include "supersat/error.hpp"

namespace supersat {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw Error("negative vertex count");
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second)
            throw Error("self-loop at vertex " + std::to_string(e.first));
        if (e.first < 0 || e.second >= n)
            throw Error("edge (" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + ") out of range for n=" +
                        std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    row_words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * row_words_, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<size_t>(u) * row_words_ + v / 64] |= uint64_t{1} << (v % 64);
        bits_[static_cast<size_t>(v) * row_words_ + u / 64] |= uint64_t{1} << (u % 64);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return (bits_[static_cast<size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1;
}

std::vector<int> Graph::support() const {
    std::vector<int> s;
    for (int v = 0; v < n_; ++v)
        if (!adj_[v].empty()) s.push_back(v);
    return s;
}

int Graph::support_size() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (!adj_[v].empty()) ++c;
    return c;
}

int Graph::min_support_degree() const {
    int d = 0;
    bool seen = false;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].empty()) continue;
        if (!seen || degree(v) < d) d = degree(v);
        seen = true;
    }
    return seen ? d : 0;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> visited(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (visited[s] || adj_[s].empty()) continue;
        std::vector<int> comp;
        stack.push_back(s);
        visited[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph Graph::with_edge_added(int u, int v) const {
    if (has_edge(u, v)) throw Error("edge already present");
    auto e = edges_;
    e.push_back(make_edge(u, v));
    return Graph(n_, std::move(e));
}

Graph Graph::with_edge_removed(int u, int v) const {
    if (!has_edge(u, v)) throw Error("edge not present");
    auto e = edges_;
    e.erase(std::find(e.begin(), e.end(), make_edge(u, v)));
    return Graph(n_, std::move(e));
}

Graph Graph::normalized(std::vector<int>* old_labels) const {
    std::vector<int> sup = support();
    std::vector<int> newid(n_, -1);
    for (size_t i = 0; i < sup.size(); ++i) newid[sup[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& [u, v] : edges_) es.emplace_back(newid[u], newid[v]);
    if (old_labels) *old_labels = sup;
    return Graph(static_cast<int>(sup.size()), std::move(es));
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> newid(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (v < 0 || v >= n_) throw Error("induced: vertex out of range");
        if (newid[v] != -1) throw Error("induced: duplicate vertex");
        newid[v] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_)
        if (newid[u] != -1 && newid[v] != -1)
            es.push_back(make_edge(newid[u], newid[v]));
    return Graph(static_cast<int>(verts.size()), std::move(es));
}

Graph Graph::complement() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) es.emplace_back(u, v);
    return Graph(n_, std::move(es));
}

std::vector<int> VertexPartition::part_of() const {
    std::vector<int> idx(universe, -1);
    for (size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) idx[v] = static_cast<int>(p);
    return idx;
}

void VertexPartition::validate() const {
    std::vector<char> seen(universe, 0);
    for (const auto& part : parts)
        for (int v : part) {
            if (v < 0 || v >= universe) throw Error("partition: vertex out of range");
            if (seen[v]) throw Error("partition: parts not disjoint");
            seen[v] = 1;
        }
}

std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g) {
    std::vector<int> sup = g.support();
    if (sup.empty()) return std::nullopt;
    Graph h = g.induced(sup);
    // Parts must be the components of the complement, each a clique there,
    // with all cross pairs present in g.
    Graph hc = h.complement();
    std::vector<std::vector<int>> comps;
    {
        // components() skips isolated vertices; complement isolateds are
        // singleton parts, so collect them explicitly.
        std::vector<char> in_comp(h.n(), 0);
        for (auto& c : hc.components()) {
            for (int v : c) in_comp[v] = 1;
            comps.push_back(c);
        }
        for (int v = 0; v < h.n(); ++v)
            if (!in_comp[v]) comps.push_back({v});
    }
    for (const auto& c : comps)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (!hc.has_edge(c[i], c[j])) return std::nullopt;  // not a clique
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    // Map back to original labels.
    for (auto& c : comps)
        for (int& v : c) v = sup[v];
    return comps;
}

bool is_complete_bipartite(const Graph& g) {
    auto parts = complete_multipartite_parts(g);
    return parts && parts->size() == 2;
}

bool is_regular_complete_multipartite(const Graph& g, int* r_out) {
    auto parts = complete_multipartite_parts(g);
    if (!parts) return false;
    for (const auto& p : *parts)
        if (p.size() != parts->front().size()) return false;
    if (r_out) *r_out = static_cast<int>(parts->size());
    return true;
}

}  // namespace supersat
