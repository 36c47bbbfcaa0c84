#include "grundy/cobipartite.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "grundy/detect.hpp"

namespace grundy {

BipartitionResult bipartition(const Graph& h) {
  const int n = h.n();
  BipartitionResult res;
  res.side_a = VertexSet(n);
  res.side_b = VertexSet(n);
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = h.neighbors(u).first(); v >= 0; v = h.neighbors(u).next(v)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (side[v] == side[u]) {
          // Odd cycle: climb both endpoints to their lowest common
          // ancestor in the BFS forest.
          int x = u, y = v;
          std::vector<int> left, right;
          while (depth[x] > depth[y]) left.push_back(x), x = parent[x];
          while (depth[y] > depth[x]) right.push_back(y), y = parent[y];
          while (x != y) {
            left.push_back(x);
            right.push_back(y);
            x = parent[x];
            y = parent[y];
          }
          left.push_back(x);
          res.odd_cycle = left;
          res.odd_cycle.insert(res.odd_cycle.end(), right.rbegin(),
                               right.rend());
          return res;
        }
      }
    }
  }
  res.ok = true;
  for (int v = 0; v < n; ++v)
    (side[v] == 0 ? res.side_a : res.side_b).set(v);
  return res;
}

std::string MatchingSolution::serialize() const {
  std::ostringstream out;
  for (auto [u, v] : edges) out << u << "-" << v << "\n";
  return out.str();
}

MatchingSolution classify_edge_set(const Graph& g,
                                   std::vector<std::pair<int, int>> edges) {
  MatchingSolution sol;
  sol.edges = std::move(edges);
  sol.size = int(sol.edges.size());
  VertexSet touched(g.n());
  sol.is_matching = true;
  for (auto [u, v] : sol.edges) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge not in graph");
    if (touched.test(u) || touched.test(v)) sol.is_matching = false;
    touched.set(u);
    touched.set(v);
  }
  sol.is_edge_dominating = true;
  for (auto [u, v] : g.edges())
    if (!touched.test(u) && !touched.test(v)) {
      sol.is_edge_dominating = false;
      break;
    }
  sol.is_maximal_matching = sol.is_matching && sol.is_edge_dominating;
  return sol;
}

namespace {

void require_bipartite(const Graph& h) {
  if (!bipartition(h).ok)
    throw std::invalid_argument("graph is not bipartite");
}

bool augment(const Graph& h, int u, std::vector<int>& match,
             std::vector<bool>& visited) {
  for (int v = h.neighbors(u).first(); v >= 0; v = h.neighbors(u).next(v)) {
    if (visited[v]) continue;
    visited[v] = true;
    if (match[v] == -1 || augment(h, match[v], match, visited)) {
      match[v] = u;
      match[u] = v;
      return true;
    }
  }
  return false;
}

/// Branch-and-bound for minimum edge dominating sets. When
/// matching_only is set the chosen set must stay a matching, which
/// restricts the search to maximal matchings.
struct EdsSearch {
  const Graph& g;
  std::vector<std::pair<int, int>> all_edges;
  bool matching_only;
  int best = -1;
  std::vector<int> best_set;
  std::vector<int> chosen;

  void rec(const VertexSet& touched, const VertexSet& matched) {
    int fu = -1, fv = -1;
    for (auto [u, v] : all_edges)
      if (!touched.test(u) && !touched.test(v)) {
        fu = u;
        fv = v;
        break;
      }
    if (fu == -1) {
      if (best == -1 || int(chosen.size()) < best) {
        best = int(chosen.size());
        best_set = chosen;
      }
      return;
    }
    if (best != -1 && int(chosen.size()) + 1 >= best) return;
    for (size_t i = 0; i < all_edges.size(); ++i) {
      auto [x, y] = all_edges[i];
      if (x != fu && y != fu && x != fv && y != fv) continue;
      if (matching_only && (matched.test(x) || matched.test(y))) continue;
      VertexSet t2 = touched;
      t2.set(x);
      t2.set(y);
      VertexSet m2 = matched;
      if (matching_only) {
        m2.set(x);
        m2.set(y);
      }
      chosen.push_back(int(i));
      rec(t2, m2);
      chosen.pop_back();
    }
  }

  int run() {
    rec(VertexSet(g.n()), VertexSet(g.n()));
    return best;
  }
};

}  // namespace

MatchingSolution maximum_matching(const Graph& h) {
  require_bipartite(h);
  const int n = h.n();
  std::vector<int> match(n, -1);
  std::vector<bool> visited(n);
  BipartitionResult bp = bipartition(h);
  for (int u = bp.side_a.first(); u >= 0; u = bp.side_a.next(u)) {
    std::fill(visited.begin(), visited.end(), false);
    augment(h, u, match, visited);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    if (match[u] > u) edges.emplace_back(u, match[u]);
  return classify_edge_set(h, std::move(edges));
}

MatchingSolution min_edge_dominating(const Graph& h) {
  if (h.m() > kEdgeDominatingMaxM)
    throw std::invalid_argument("min_edge_dominating: more than 40 edges");
  EdsSearch unrestricted{h, h.edges(), false};
  int gamma = unrestricted.run();
  EdsSearch matchings{h, h.edges(), true};
  int gamma_matching = matchings.run();
  // A minimum edge dominating set can always be chosen as a (maximal)
  // matching; the two optima must agree.
  if (gamma != gamma_matching)
    throw std::logic_error("min_edge_dominating: matching optimum mismatch");
  std::vector<std::pair<int, int>> edges;
  for (int i : matchings.best_set) edges.push_back(matchings.all_edges[i]);
  std::sort(edges.begin(), edges.end());
  MatchingSolution sol = classify_edge_set(h, std::move(edges));
  if (!sol.is_maximal_matching)
    throw std::logic_error("min_edge_dominating: solution not maximal");
  return sol;
}

int grundy_cobipartite(const Graph& h) {
  require_bipartite(h);
  return h.n() - min_edge_dominating(h).size;
}

AlphaDeltaVerdict check_alpha_leq_delta(const Graph& h) {
  AlphaDeltaVerdict v;
  v.matching_number = maximum_matching(h).size;
  for (int u = 0; u < h.n(); ++u)
    v.max_degree = std::max(v.max_degree, h.degree(u));
  v.twok2_free = is_2k2_free(h);
  v.holds = v.matching_number <= v.max_degree;
  v.asserted = v.twok2_free;
  return v;
}

}  // namespace grundy
