#ifndef SUPERSAT_PATTERN_HPP
#define SUPERSAT_PATTERN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

/// One labelled proper r-coloring of F - xy with x,y pinned to color 1.
/// Colors 2..r are distinguishable labels, matching the counting formula's
/// per-class falling-factorial products.
struct ColoringProfile {
    Edge good_edge;
    std::vector<int> assignment;  // vertex -> color in 1..r
    std::vector<int> tau;         // tau[i-1] = #{z != x,y : color(z) = i}
};

/// Derived invariants of a pattern graph F (isolated vertices dropped).
struct PatternProfile {
    Graph F;
    std::string name;
    int f = 0;    // |F|
    int chi = 0;  // chromatic number
    int r = 0;    // chi - 1
    std::vector<Edge> good_edges;
    bool color_critical = false;
    long long aut = 0;
    std::map<Edge, std::vector<ColoringProfile>> colorings;  // per good edge
    std::optional<int> beta_prime;  // present iff F bipartite
};

/// Exact chromatic number by branch and bound (clique lower bound, greedy
/// upper bound). Edgeless graphs get 1 (0 when empty). Guardrail: 16
/// non-isolated vertices.
int chromatic_number(const Graph& f, bool override_guardrails = false);

/// Edges whose removal drops the chromatic number by one.
std::vector<Edge> good_edges(const Graph& f, bool override_guardrails = false);

bool is_color_critical(const Graph& f, bool override_guardrails = false);

/// All labelled proper r-colorings of F - xy with x,y -> 1, r = chi(F) - 1.
/// Verifies at runtime that every proper r-coloring of F - xy agrees on x
/// and y, and throws otherwise (that would falsify the good-edge
/// classification).
std::vector<ColoringProfile> enumerate_colorings(const Graph& f, Edge xy,
                                                 bool override_guardrails = false);

/// |Aut(F)|. Guardrail: 12 vertices.
long long automorphism_count(const Graph& f, bool override_guardrails = false);

bool is_bipartite(const Graph& f, std::vector<int>* side = nullptr);

/// Minimum independent covering size; throws for non-bipartite input.
int beta_prime(const Graph& f, bool override_guardrails = false);

PatternProfile build_pattern_profile(const Graph& f, const std::string& name = "",
                                     bool override_guardrails = false);

/// Named registry: K3 K4 K5 C4 C5 kite petersen star:k Kab+e:a,b.
std::optional<Graph> pattern_registry_lookup(const std::string& name);
std::vector<std::string> pattern_registry_names();

}  // namespace supersat

#endif
