#ifndef GRUNDY_GENERATORS_HPP
#define GRUNDY_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// T_1 = K_1, T_2 = K_2; T_{k+1} attaches one leaf to every vertex of
/// T_k (new leaves in ascending order of their parent). |V(T_k)| =
/// 2^(k-1) and chi_FF(T_k) = k. 1 <= k <= 10.
Graph tree_tk(int k);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph path(int n);
Graph cycle(int n);
Graph petersen();

/// Random k-tree: K_{k+1} plus n-k-1 vertices each attached to a seeded
/// choice of existing k-clique. Chordal with delta = k, omega = k+1.
Graph random_ktree(int n, int k, uint64_t seed);

/// 2K2-free bipartite graph: side-A neighborhoods are nested prefixes of
/// side B, thresholds sampled uniformly in 0..n_b and sorted descending.
Graph chain_graph(int n_a, int n_b, uint64_t seed);
Graph chain_graph_from_thresholds(int n_a, int n_b,
                                  const std::vector<int>& thresholds);

/// Point-line incidence graph of PG(2, q), q in {2, 3, 5, 7}:
/// 2(q^2+q+1) vertices, (q+1)-regular, girth 6 (C4-free).
Graph incidence_projective_plane(int q);

Graph random_gnp(int n, double p, uint64_t seed);

/// All 2^(n(n-1)/2) labeled graphs on n vertices, n <= 7. Bit j of the
/// index drives the j-th pair in lexicographic order (0,1), (0,2), ...
struct LabeledGraphStream {
  explicit LabeledGraphStream(int n);
  long long count() const { return count_; }
  Graph get(long long index) const;

 private:
  int n_;
  long long count_;
};

/// Graph on n vertices from an upper-triangle bit mask (pairs in
/// lexicographic order); works for any n within the vertex cap.
Graph graph_from_pair_mask(int n, unsigned long long mask);

/// Seeded instance description; same spec always yields the same graph.
struct GenSpec {
  std::string family;  // tk|complete|bipartite|path|cycle|petersen|
                       // ktree|chain|plane|gnp
  int n = 0, k = 0, a = 0, b = 0, q = 0;
  double p = 0.5;
  uint64_t seed = 0;
};

Graph make_graph(const GenSpec& spec);

}  // namespace grundy

#endif  // GRUNDY_GENERATORS_HPP
