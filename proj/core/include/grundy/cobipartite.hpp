#ifndef GRUNDY_COBIPARTITE_HPP
#define GRUNDY_COBIPARTITE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

struct BipartitionResult {
  bool ok = false;
  VertexSet side_a, side_b;
  std::vector<int> odd_cycle;  // witness when !ok, in cyclic order
};

/// BFS 2-coloring per component; vertex 0's side (per component: the
/// lowest vertex's side) is A.
BipartitionResult bipartition(const Graph& h);

struct MatchingSolution {
  std::vector<std::pair<int, int>> edges;
  int size = 0;
  bool is_matching = false;
  bool is_edge_dominating = false;
  bool is_maximal_matching = false;

  /// "u-v" edge lines.
  std::string serialize() const;
};

/// Recompute the flags of an edge set against g.
MatchingSolution classify_edge_set(const Graph& g,
                                   std::vector<std::pair<int, int>> edges);

/// Maximum matching via augmenting paths. Throws if h is not bipartite.
MatchingSolution maximum_matching(const Graph& h);

inline constexpr int kEdgeDominatingMaxM = 40;

/// Exact minimum edge dominating set, |E| <= 40. The returned solution
/// is simultaneously a matching (maximal, hence edge dominating); its
/// optimality is proved against the unrestricted branch-and-bound.
MatchingSolution min_edge_dominating(const Graph& h);

/// chi_FF(complement(h)) = |V(h)| - gamma'(h) for bipartite h.
int grundy_cobipartite(const Graph& h);

struct AlphaDeltaVerdict {
  int matching_number = 0;   // alpha'
  int max_degree = 0;        // Delta; 0 for empty graph
  bool twok2_free = false;
  bool asserted = false;     // inequality only claimed when twok2_free
  bool holds = false;        // alpha' <= Delta
};

/// alpha'(H) <= Delta(H), asserted only for 2K2-free bipartite H.
AlphaDeltaVerdict check_alpha_leq_delta(const Graph& h);

}  // namespace grundy

#endif  // GRUNDY_COBIPARTITE_HPP
