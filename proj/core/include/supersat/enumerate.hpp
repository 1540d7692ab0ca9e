#ifndef SUPERSAT_ENUMERATE_HPP
#define SUPERSAT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

struct EnumerateOptions {
    int max_n = 0;   // cap on non-isolated vertices
    int m = 0;       // exact edge count
    bool dedupe = false;
    bool override_guardrails = false;  // guardrails: max_n <= 10, m <= 15
};

/// Streams every simple graph with exactly m edges on at most max_n
/// non-isolated vertices.
///
/// dedupe=false: all labeled graphs on the vertex set 0..max_n-1 (vertices
/// outside the edge support are carried as isolated), in lexicographic
/// edge-subset order.
///
/// dedupe=true: exactly one representative per isomorphism class, normalized
/// (no isolated vertices), ordered by canonical form. Built level-by-level:
/// each k-edge class is extended by one edge (within the support, to one new
/// vertex, or as a fresh disjoint edge) and deduped by canonical form.
void enumerate_graphs(const EnumerateOptions& opts,
                      const std::function<void(const Graph&)>& yield);

std::vector<Graph> enumerate_collect(const EnumerateOptions& opts);

}  // namespace supersat

#endif
