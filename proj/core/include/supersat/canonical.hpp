#ifndef SUPERSAT_CANONICAL_HPP
#define SUPERSAT_CANONICAL_HPP

#include <string>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

/// Iterated degree refinement (1-WL). Colors are isomorphism-invariant
/// ranks: two vertices get the same color iff their refinement signatures
/// agree, and the numbering is derived from sorted signatures only.
std::vector<int> stable_coloring(const Graph& g);

/// Canonical form: a printable string equal for two graphs iff they are
/// isomorphic (isolated vertices included in the comparison). Components are
/// canonicalized independently by refinement-guided permutation backtracking
/// and the sorted per-component forms are concatenated.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// |Aut(g)| via twin-class factoring plus permutation backtracking over
/// color-compatible maps. Isolated vertices contribute their factorial.
long long automorphism_count_exact(const Graph& g);

}  // namespace supersat

#endif
