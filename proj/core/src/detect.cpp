#include "grundy/detect.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace grundy {

namespace {

struct InducedSearch {
  const Graph& pat;
  const Graph& host;
  std::vector<int> order;       // pattern vertices, highest degree first
  std::vector<int> assign;      // pattern vertex -> host vertex
  VertexSet used;

  bool extend(size_t pos) {
    if (pos == order.size()) return true;
    int p = order[pos];
    int pdeg = pat.degree(p);
    for (int h = 0; h < host.n(); ++h) {
      if (used.test(h) || host.degree(h) < pdeg) continue;
      bool ok = true;
      for (size_t j = 0; j < pos; ++j) {
        int q = order[j];
        if (pat.adjacent(p, q) != host.adjacent(h, assign[q])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assign[p] = h;
      used.set(h);
      if (extend(pos + 1)) return true;
      used.reset(h);
    }
    return false;
  }
};

/// Edges of g[s]? true iff some edge lies entirely within s.
bool set_has_edge(const Graph& g, const VertexSet& s) {
  for (int x = s.first(); x >= 0; x = s.next(x))
    if (g.neighbors(x).intersects(s)) return true;
  return false;
}

bool neighborhood_is_clique(const Graph& g, const VertexSet& nv) {
  for (int x = nv.first(); x >= 0; x = nv.next(x)) {
    VertexSet rest = nv;
    rest.subtract(g.neighbors(x));
    rest.reset(x);
    if (!rest.empty()) return false;
  }
  return true;
}

/// Chordless cycle of length >= 4 in a non-chordal graph. Scans triples
/// (v; x, y) with x, y non-adjacent neighbors of v and takes a shortest
/// x-y path avoiding the rest of N[v].
std::optional<std::vector<int>> find_hole(const Graph& g) {
  const int n = g.n();
  for (int v = 0; v < n; ++v) {
    const VertexSet& nv = g.neighbors(v);
    for (int x = nv.first(); x >= 0; x = nv.next(x)) {
      for (int y = nv.next(x); y >= 0; y = nv.next(y)) {
        if (g.adjacent(x, y)) continue;
        VertexSet allowed = VertexSet::full(n);
        allowed.subtract(nv);
        allowed.reset(v);
        allowed.set(x);
        allowed.set(y);
        // BFS shortest x-y path inside allowed.
        std::vector<int> parent(n, -2);
        std::queue<int> q;
        parent[x] = -1;
        q.push(x);
        while (!q.empty() && parent[y] == -2) {
          int u = q.front();
          q.pop();
          for (int w = g.neighbors(u).first(); w >= 0;
               w = g.neighbors(u).next(w)) {
            if (!allowed.test(w) || parent[w] != -2) continue;
            parent[w] = u;
            q.push(w);
          }
        }
        if (parent[y] == -2) continue;
        std::vector<int> cycle{v};
        for (int u = y; u != -1; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        if (!is_chordless_cycle(g, cycle))
          throw std::logic_error("find_hole: witness cycle has a chord");
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> contains_induced(const Graph& pattern,
                                          const Graph& host) {
  if (pattern.n() > kPatternMaxN)
    throw std::invalid_argument("contains_induced: pattern larger than 10");
  if (pattern.n() > host.n()) return std::nullopt;
  InducedSearch s{pattern, host};
  s.order.resize(pattern.n());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return pattern.degree(a) > pattern.degree(b);
  });
  s.assign.assign(pattern.n(), -1);
  s.used = VertexSet(host.n());
  if (!s.extend(0)) return std::nullopt;
  VertexSet witness(host.n());
  for (int h : s.assign) witness.set(h);
  return witness;
}

bool has_induced_c4(const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      VertexSet common = g.neighbors(u);
      common &= g.neighbors(v);
      if (common.count() < 2) continue;
      if (!neighborhood_is_clique(g, common)) return true;
    }
  }
  return false;
}

bool is_kll_free(const Graph& g, int l) {
  if (l < 1 || l > 3) throw std::invalid_argument("is_kll_free: l must be 1..3");
  Graph::Builder b(2 * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) b.add_edge(i, l + j);
  return !contains_induced(std::move(b).build(), g).has_value();
}

bool is_2k2_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    VertexSet rest = VertexSet::full(g.n());
    rest.subtract(g.neighbors(u));
    rest.subtract(g.neighbors(v));
    rest.reset(u);
    rest.reset(v);
    if (set_has_edge(g, rest)) return false;
  }
  return true;
}

std::variant<EliminationOrdering, NotChordal> is_chordal(const Graph& g) {
  const int n = g.n();
  // Maximum cardinality search; ties broken by lowest vertex index.
  std::vector<int> weight(n, 0);
  std::vector<bool> picked(n, false);
  std::vector<int> mcs;
  mcs.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!picked[v] && (best == -1 || weight[v] > weight[best])) best = v;
    picked[best] = true;
    mcs.push_back(best);
    for (int v = g.neighbors(best).first(); v >= 0;
         v = g.neighbors(best).next(v))
      if (!picked[v]) ++weight[v];
  }
  // Reverse MCS order is a perfect elimination ordering iff g is chordal.
  EliminationOrdering elim;
  elim.order.assign(mcs.rbegin(), mcs.rend());
  elim.simplicial.assign(n, false);
  VertexSet remaining = VertexSet::full(n);
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    int v = elim.order[i];
    remaining.reset(v);
    VertexSet later = g.neighbors(v);
    later &= remaining;
    elim.simplicial[i] = neighborhood_is_clique(g, later);
    if (!elim.simplicial[i]) ok = false;
  }
  if (ok) {
    if (!verify_elimination_ordering(g, elim.order))
      throw std::logic_error("is_chordal: re-check of accepted order failed");
    return elim;
  }
  auto hole = find_hole(g);
  // MCS failure on a chordal graph is impossible, so a hole must exist.
  if (!hole) throw std::logic_error("is_chordal: no hole in non-chordal graph");
  return NotChordal{*hole};
}

bool verify_elimination_ordering(const Graph& g,
                                 const std::vector<int>& order) {
  if (!Graph::is_permutation(order, g.n())) return false;
  VertexSet remaining = VertexSet::full(g.n());
  for (int v : order) {
    remaining.reset(v);
    VertexSet later = g.neighbors(v);
    later &= remaining;
    for (int x = later.first(); x >= 0; x = later.next(x)) {
      VertexSet rest = later;
      rest.subtract(g.neighbors(x));
      rest.reset(x);
      if (!rest.empty()) return false;
    }
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<bool> seen(g.n(), false);
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = true;
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (neighborhood_is_clique(g, g.neighbors(v))) out.set(v);
  return out;
}

bool is_complete_bipartite(const Graph& g) {
  const int n = g.n();
  if (n == 0) return false;
  // 2-color; any odd cycle disqualifies.
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  long long a = 0;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    if (s > 0) return false;  // disconnected
    side[s] = 0;
    ++a;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          if (side[v] == 0) ++a;
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return g.m() == a * (n - a);
}

}  // namespace grundy
