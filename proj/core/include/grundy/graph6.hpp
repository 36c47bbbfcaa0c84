#ifndef GRUNDY_GRAPH6_HPP
#define GRUNDY_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

/// Edge-list text: "u v" per line (0-indexed). A line holding a single
/// integer sets the vertex count; otherwise n = max endpoint + 1.
/// '#' starts a comment.
Graph from_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

/// One graph6 string per non-empty line; lines starting with '>' skipped
/// (nauty-style header).
std::vector<std::string> read_g6_lines(const std::string& path);

/// Human-readable adjacency rows for debugging.
std::string adjacency_dump(const Graph& g);

}  // namespace grundy

#endif  // GRUNDY_GRAPH6_HPP
