#ifndef GRUNDY_GRAPH_HPP
#define GRUNDY_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

inline constexpr int kMaxVertices = 512;

/// Simple undirected graph on vertices 0..n-1, stored as symmetric bit rows.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  class Builder;

  Graph() = default;

  int n() const { return n_; }
  long long m() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  std::vector<std::pair<int, int>> edges() const;

  /// Ordering = permutation of 0..n-1.
  static bool is_permutation(const std::vector<int>& order, int n);

 private:
  friend class Builder;
  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

class Graph::Builder {
 public:
  explicit Builder(int n);
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int n() const { return n_; }
  Graph build() &&;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

struct DegreeSummary {
  std::vector<int> degree;
  std::optional<int> min_degree;  // unset for n = 0
  std::optional<int> max_degree;
};

DegreeSummary degrees(const Graph& g);

Graph complement(const Graph& g);

/// Vertices of s relabeled 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

}  // namespace grundy

#endif  // GRUNDY_GRAPH_HPP
