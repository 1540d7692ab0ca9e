#ifndef SUPERSAT_GRAPH_IO_HPP
#define SUPERSAT_GRAPH_IO_HPP

#include <string>

#include "supersat/graph.hpp"

namespace supersat {

/// Edge-list format: first line "n m", then m lines "u v", 0-based, LF endings.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Standard graph6 encoding, up to 62 vertices.
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

/// Accepts either format: a first line containing a space is an edge list.
Graph read_graph(const std::string& text);

/// Canonical textual form (the edge-list writer).
inline std::string write_graph(const Graph& g) { return write_edge_list(g); }

}  // namespace supersat

#endif
