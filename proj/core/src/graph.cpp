#include "grundy/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace grundy {

Graph::Builder::Builder(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range 0..512");
}

void Graph::Builder::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

Graph Graph::Builder::build() && {
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(adj_);
  long long twice = 0;
  for (const auto& row : g.adj_) twice += row.count();
  g.m_ = twice / 2;
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size_t(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

bool Graph::is_permutation(const std::vector<int>& order, int n) {
  if (int(order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

DegreeSummary degrees(const Graph& g) {
  DegreeSummary s;
  s.degree.resize(g.n());
  for (int v = 0; v < g.n(); ++v) s.degree[v] = g.degree(v);
  if (g.n() > 0) {
    s.min_degree = *std::min_element(s.degree.begin(), s.degree.end());
    s.max_degree = *std::max_element(s.degree.begin(), s.degree.end());
  }
  return s;
}

Graph complement(const Graph& g) {
  Graph::Builder b(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> keep = s.members();
  Graph::Builder b(int(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(int(i), int(j));
  return std::move(b).build();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  for (int s = 0; s < g.n(); ++s) {
    if (seen.test(s)) continue;
    VertexSet comp(g.n());
    std::vector<int> stack{s};
    comp.set(s);
    seen.set(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (!seen.test(v)) {
          seen.set(v);
          comp.set(v);
          stack.push_back(v);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return components(g).size() == 1;
}

}  // namespace grundy
