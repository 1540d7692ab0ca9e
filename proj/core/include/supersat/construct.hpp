#ifndef SUPERSAT_CONSTRUCT_HPP
#define SUPERSAT_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

struct TuranGraph {
    Graph graph;
    VertexPartition partition;
};

struct TuranPlusEdge {
    Graph graph;
    VertexPartition partition;
    Edge added;
};

/// Turan graph T_{n,r}: parts laid out largest-first, ceil(n/r) repeated
/// (n mod r) times then floor(n/r), vertices assigned contiguously.
TuranGraph build_turan(int n, int r);

/// T*_{n,r}: Turan graph plus one edge inside a smallest part, between its
/// two lowest-indexed vertices. Rejects r = n (every part a singleton).
TuranPlusEdge build_turan_plus_edge(int n, int r);

/// Same, with the extra edge in the given part (which must have >= 2 vertices).
TuranPlusEdge build_turan_plus_edge_in_part(int n, int r, int part);

Graph build_complete_multipartite(const std::vector<int>& sizes,
                                  VertexPartition* partition = nullptr);

/// K_{a,b} plus one edge inside the class of size a; requires a >= 2, b >= 1.
Graph build_bipartite_plus_edge(int a, int b);

Graph build_clique(int k);
Graph build_cycle(int k);
Graph build_path(int k);
Graph build_star(int leaves);
/// 4-cycle 0-1-2-3 plus the chord 0-2.
Graph build_kite();
Graph build_petersen();

enum class FamilyKind {
    turan,
    turan_plus_edge,
    complete_multipartite,
    complete_bipartite_plus_edge,
    star,
    cycle,
    clique,
    kite,
};

struct GraphFamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

/// Validates parameters for the kind and builds the graph.
Graph build_family(const GraphFamilySpec& spec);

/// Parses a family name as used by the CLI ("turan", "turan-plus-edge", ...).
FamilyKind parse_family_kind(const std::string& name);
std::string family_kind_name(FamilyKind kind);

}  // namespace supersat

#endif
