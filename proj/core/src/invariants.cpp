#include "grundy/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace grundy {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // Magnitudes here are tiny (m <= ~130k, n <= 512); no overflow concern.
  return num * o.den <=> o.num * den;
}

std::string Rational::str() const {
  std::ostringstream out;
  out << num;
  if (den != 1) out << "/" << den;
  return out.str();
}

std::optional<int> girth(const Graph& g) {
  const int n = g.n();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    parent[s] = -1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best != -1 && 2 * dist[u] >= best) break;
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
    if (best == 3) break;
  }
  if (best == -1) return std::nullopt;
  return best;
}

bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      if (g.neighbors(u).intersects(g.neighbors(v))) return true;
  return false;
}

Rational rho(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("rho: empty graph");
  return Rational(g.m(), g.n());
}

int coloring_number(const Graph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int max_min = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    max_min = std::max(max_min, deg[pick]);
    alive[pick] = false;
    for (int v = g.neighbors(pick).first(); v >= 0;
         v = g.neighbors(pick).next(v))
      if (alive[v]) --deg[v];
  }
  return max_min + 1;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  int best = 0;
  void expand(VertexSet cand, int size) {
    if (size > best) best = size;
    if (size + cand.count() <= best) return;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      if (size + cand.count() <= best) return;
      VertexSet next = cand;
      next &= g.neighbors(v);
      expand(next, size + 1);
      cand.reset(v);
    }
  }
};

bool colorable(const Graph& g, const std::vector<int>& order, int k,
               std::vector<int>& color, size_t pos, int used) {
  if (pos == order.size()) return true;
  int v = order[pos];
  // Symmetry break: a fresh color may only be the next unused one.
  int limit = std::min(k, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (color[u] == c) {
        ok = false;
        break;
      }
    if (ok) {
      color[v] = c;
      if (colorable(g, order, k, color, pos + 1, std::max(used, c)))
        return true;
      color[v] = 0;
    }
  }
  return false;
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.n() > kCliqueMaxN)
    throw std::invalid_argument("clique_number: n > 64");
  CliqueSearch s{g};
  s.expand(VertexSet::full(g.n()), 0);
  return s.best;
}

int chromatic_number_exact(const Graph& g) {
  const int n = g.n();
  if (n > kChromaticMaxN)
    throw std::invalid_argument("chromatic_number_exact: n > 16");
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int lb = clique_number(g);
  std::vector<int> color(n, 0);
  for (int k = std::max(lb, 1);; ++k) {
    std::fill(color.begin(), color.end(), 0);
    if (colorable(g, order, k, color, 0, 0)) return k;
  }
}

}  // namespace grundy
