#ifndef SUPERSAT_STABILITY_HPP
#define SUPERSAT_STABILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

/// Edit distance |E(G)\E(H)| + |E(H)\E(G)| with V(H) identified into V(G)
/// by the injective map `identification` (identification[v] = image of v).
long long edit_distance(const Graph& g, const Graph& h,
                        const std::vector<int>& identification);

enum class DistanceMethod { exact, local_search_upper_bound };

struct DistanceResult {
    long long distance = 0;
    VertexPartition witness;  // parts over a subset of V(G); the rest is "out"
    DistanceMethod method = DistanceMethod::exact;
    std::string target;

    /// Recomputes the distance realized by the witness (sanity hook).
    long long recompute(const Graph& g, bool near_equal_required) const;
};

struct LocalSearchOptions {
    int starts = 32;
    uint64_t seed = 1;
    int non_improving_cap_per_n = 200;  // stop after 200*n non-improving moves
};

/// Distance to the nearest Turan graph T_{k,r} on a vertex subset of G
/// (unassigned vertices contribute all their edges). Exact mode exhausts
/// assignments with symmetry pruning (guardrail |G| <= 12); heuristic mode
/// is seeded multi-start single-vertex relocation, an upper bound only.
DistanceResult distance_to_turan(const Graph& g, int r, DistanceMethod mode,
                                 const LocalSearchOptions& opts = {},
                                 bool override_guardrails = false);

/// Distance to the nearest complete bipartite graph K_{U,V} over disjoint
/// U,V subsets of V(G); no balance constraint. Exact guardrail |G| <= 14.
DistanceResult distance_to_bipartite(const Graph& g, DistanceMethod mode,
                                     const LocalSearchOptions& opts = {},
                                     bool override_guardrails = false);

}  // namespace supersat

#endif
