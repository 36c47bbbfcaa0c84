#ifndef GRUNDY_DETECT_HPP
#define GRUNDY_DETECT_HPP

#include <optional>
#include <variant>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

inline constexpr int kPatternMaxN = 10;

/// Vertex set of host inducing a copy of pattern, or nullopt.
/// Backtracking with degree pruning; |pattern| <= 10.
std::optional<VertexSet> contains_induced(const Graph& pattern,
                                          const Graph& host);

/// Chordless 4-cycle present? Pair scan; agrees with
/// contains_induced(C_4, g).
bool has_induced_c4(const Graph& g);

/// No induced K_{l,l}; l <= 3.
bool is_kll_free(const Graph& g, int l);

/// No pair of independent edges with no edge between them.
bool is_2k2_free(const Graph& g);

/// Elimination order with per-position simplicial flags (all true when
/// the order is accepted).
struct EliminationOrdering {
  std::vector<int> order;
  std::vector<bool> simplicial;
};

/// Chordless cycle of length >= 4, in cyclic order.
struct NotChordal {
  std::vector<int> cycle;
};

/// Maximum-cardinality-search order, verified position by position.
std::variant<EliminationOrdering, NotChordal> is_chordal(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);

/// Independent re-check used on every accepted elimination ordering.
bool verify_elimination_ordering(const Graph& g, const std::vector<int>& order);

/// Helper for cycle witnesses: true iff cycle is chordless of length >= 4.
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

bool is_complete_bipartite(const Graph& g);

}  // namespace grundy

#endif  // GRUNDY_DETECT_HPP
