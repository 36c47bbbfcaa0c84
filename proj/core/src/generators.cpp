#include "grundy/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "grundy/rng.hpp"

namespace grundy {

Graph tree_tk(int k) {
  if (k < 1 || k > 10) throw std::invalid_argument("tree_tk: k must be 1..10");
  std::vector<std::pair<int, int>> edges;
  int n = 1;
  for (int step = 2; step <= k; ++step) {
    int old_n = n;
    for (int v = 0; v < old_n; ++v) edges.emplace_back(v, n++);
  }
  Graph::Builder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1");
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete_bipartite: parts >= 1");
  Graph::Builder bld(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) bld.add_edge(u, a + v);
  return std::move(bld).build();
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1");
  Graph::Builder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3");
  Graph::Builder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
  b.add_edge(n - 1, 0);
  return std::move(b).build();
}

Graph petersen() {
  Graph::Builder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    b.add_edge(i, 5 + i);                // spokes
  }
  return std::move(b).build();
}

Graph random_ktree(int n, int k, uint64_t seed) {
  if (k < 1 || n < k + 1)
    throw std::invalid_argument("random_ktree: need n >= k+1 >= 2");
  SplitMix64 rng(seed);
  Graph::Builder b(n);
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) b.add_edge(u, v);
  // Track the k-cliques available for attachment.
  std::vector<std::vector<int>> cliques;
  {
    std::vector<int> base(k + 1);
    for (int i = 0; i <= k; ++i) base[i] = i;
    for (int skip = 0; skip <= k; ++skip) {
      std::vector<int> c;
      for (int i = 0; i <= k; ++i)
        if (i != skip) c.push_back(base[i]);
      cliques.push_back(c);
    }
  }
  for (int v = k + 1; v < n; ++v) {
    const std::vector<int> host = cliques[rng.next_below(cliques.size())];
    for (int u : host) b.add_edge(u, v);
    for (int skip = 0; skip < k; ++skip) {
      std::vector<int> c;
      for (int i = 0; i < k; ++i)
        if (i != skip) c.push_back(host[i]);
      c.push_back(v);
      cliques.push_back(c);
    }
  }
  return std::move(b).build();
}

Graph chain_graph_from_thresholds(int n_a, int n_b,
                                  const std::vector<int>& thresholds) {
  if (n_a < 1 || n_b < 1)
    throw std::invalid_argument("chain_graph: parts >= 1");
  if (int(thresholds.size()) != n_a)
    throw std::invalid_argument("chain_graph: one threshold per A-vertex");
  Graph::Builder b(n_a + n_b);
  for (int i = 0; i < n_a; ++i) {
    int t = thresholds[i];
    if (t < 0 || t > n_b) throw std::invalid_argument("chain_graph: threshold");
    for (int j = 0; j < t; ++j) b.add_edge(i, n_a + j);
  }
  return std::move(b).build();
}

Graph chain_graph(int n_a, int n_b, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> t(n_a);
  for (int& x : t) x = int(rng.next_below(uint64_t(n_b) + 1));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return chain_graph_from_thresholds(n_a, n_b, t);
}

Graph incidence_projective_plane(int q) {
  if (q != 2 && q != 3 && q != 5 && q != 7)
    throw std::invalid_argument("incidence_projective_plane: q in {2,3,5,7}");
  // Normalized homogeneous triples over GF(q): (1,x,y), (0,1,x), (0,0,1).
  std::vector<std::array<int, 3>> pts;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) pts.push_back({1, x, y});
  for (int x = 0; x < q; ++x) pts.push_back({0, 1, x});
  pts.push_back({0, 0, 1});
  const int np = int(pts.size());  // q^2 + q + 1
  Graph::Builder b(2 * np);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      int dot = 0;
      for (int t = 0; t < 3; ++t) dot += pts[i][t] * pts[j][t];
      if (dot % q == 0) b.add_edge(i, np + j);  // point i on line j
    }
  return std::move(b).build();
}

Graph random_gnp(int n, double p, uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("random_gnp: bad parameters");
  SplitMix64 rng(seed);
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) b.add_edge(u, v);
  return std::move(b).build();
}

LabeledGraphStream::LabeledGraphStream(int n) : n_(n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("LabeledGraphStream: n must be 0..7");
  count_ = 1LL << (n * (n - 1) / 2);
}

Graph LabeledGraphStream::get(long long index) const {
  if (index < 0 || index >= count_)
    throw std::out_of_range("LabeledGraphStream: index");
  return graph_from_pair_mask(n_, (unsigned long long)index);
}

Graph graph_from_pair_mask(int n, unsigned long long mask) {
  Graph::Builder b(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) b.add_edge(u, v);
  return std::move(b).build();
}

Graph make_graph(const GenSpec& s) {
  if (s.family == "tk") return tree_tk(s.k);
  if (s.family == "complete") return complete(s.n);
  if (s.family == "bipartite") return complete_bipartite(s.a, s.b);
  if (s.family == "path") return path(s.n);
  if (s.family == "cycle") return cycle(s.n);
  if (s.family == "petersen") return petersen();
  if (s.family == "ktree") return random_ktree(s.n, s.k, s.seed);
  if (s.family == "chain") return chain_graph(s.a, s.b, s.seed);
  if (s.family == "plane") return incidence_projective_plane(s.q);
  if (s.family == "gnp") return random_gnp(s.n, s.p, s.seed);
  throw std::invalid_argument("unknown family: " + s.family);
}

}  // namespace grundy
