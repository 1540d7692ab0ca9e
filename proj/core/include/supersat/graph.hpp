#ifndef SUPERSAT_GRAPH_HPP
#define SUPERSAT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace supersat {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Isolated vertices may be carried; spectral and counting code ignores
/// them, and normalized() drops them. Values are safe to share across
/// threads once constructed.
class Graph {
public:
    Graph() = default;

    /// Validates the edge list: indices in range, no loops, no duplicates.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    bool empty() const { return edges_.empty(); }

    /// Non-isolated vertices, ascending.
    std::vector<int> support() const;
    int support_size() const;
    /// Minimum degree over non-isolated vertices (0 for an edgeless graph).
    int min_support_degree() const;
    /// Connected components of the support, each sorted, ordered by least vertex.
    std::vector<std::vector<int>> components() const;

    Graph with_edge_added(int u, int v) const;
    Graph with_edge_removed(int u, int v) const;
    /// Drops isolated vertices, relabelling to 0..s-1; old_labels[i] = original id.
    Graph normalized(std::vector<int>* old_labels = nullptr) const;
    /// Subgraph induced by `verts`, relabelled by position in `verts`.
    Graph induced(const std::vector<int>& verts) const;
    Graph complement() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;  // n_ rows of row_words_ words each
    int row_words_ = 0;
};

/// Ordered list of disjoint vertex sets covering part of a vertex universe.
struct VertexPartition {
    std::vector<std::vector<int>> parts;
    int universe = 0;

    int r() const { return static_cast<int>(parts.size()); }
    /// part_of[v] = part index, or -1 when v is in no part.
    std::vector<int> part_of() const;
    /// Throws Error unless parts are disjoint subsets of 0..universe-1.
    void validate() const;
};

/// Parts of a complete multipartite graph (on the support), or nullopt.
/// Parts are the components of the complement of the support; sorted by size
/// descending, then by least vertex.
std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g);

/// Complete bipartite up to isolated vertices (includes K_{1,1}).
bool is_complete_bipartite(const Graph& g);

/// Complete r-partite with all parts equal, up to isolated vertices.
bool is_regular_complete_multipartite(const Graph& g, int* r_out = nullptr);

}  // namespace supersat

#endif
