#include "grundy/grundy.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace grundy {

int Coloring::max_color() const {
  int k = 0;
  for (int c : color) k = std::max(k, c);
  return k;
}

bool Coloring::total() const {
  for (int c : color)
    if (c == 0) return false;
  return true;
}

int Coloring::colored_count() const {
  int k = 0;
  for (int c : color)
    if (c > 0) ++k;
  return k;
}

std::string Coloring::serialize() const {
  std::ostringstream out;
  for (size_t v = 0; v < color.size(); ++v)
    if (color[v] > 0) out << v << ":" << color[v] << "\n";
  return out.str();
}

Coloring greedy_color(const Graph& g, const std::vector<int>& order) {
  if (!Graph::is_permutation(order, g.n()))
    throw std::invalid_argument("greedy_color: order is not a permutation");
  Coloring c(g.n());
  for (int v : order) {
    uint64_t used = 0;  // colors never exceed degree+1 <= 512, chunked scan
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (c.color[u] > 0 && c.color[u] <= 64)
        used |= uint64_t{1} << (c.color[u] - 1);
    int col = 0;
    if (~used) col = std::countr_one(used) + 1;
    if (col == 0 || col > 64) {
      // Rare: more than 64 distinct neighbor colors; fall back to scan.
      std::vector<bool> seen(g.degree(v) + 2, false);
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
        if (c.color[u] > 0 && c.color[u] <= g.degree(v) + 1)
          seen[c.color[u]] = true;
      col = 1;
      while (seen[col]) ++col;
    }
    c.color[v] = col;
  }
  return c;
}

bool is_grundy_coloring(const Graph& g, const Coloring& c) {
  if (int(c.color.size()) != g.n() || !c.total()) return false;
  return is_partial_grundy(g, c);
}

bool is_partial_grundy(const Graph& g, const Coloring& c) {
  if (int(c.color.size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v) {
    int cv = c.color[v];
    if (cv < 0) return false;
    if (cv == 0) continue;
    uint64_t low = 0;  // colors 1..63 tracked by bits, larger by scan
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
      if (c.color[u] == cv) return false;  // not proper
      if (c.color[u] > 0 && c.color[u] < 64)
        low |= uint64_t{1} << c.color[u];
    }
    for (int i = 1; i < cv; ++i) {
      bool found = i < 64 ? ((low >> i) & 1) : false;
      if (!found && i >= 64) {
        for (int u = g.neighbors(v).first(); u >= 0;
             u = g.neighbors(v).next(u))
          if (c.color[u] == i) {
            found = true;
            break;
          }
      }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

/// Extend a partial Grundy coloring to a total one, first-fit over the
/// uncolored vertices in ascending order. Colors already placed are
/// untouched, so the maximum can only grow.
void extend_greedy(const Graph& g, Coloring& c) {
  for (int v = 0; v < g.n(); ++v) {
    if (c.color[v] != 0) continue;
    int col = 1;
    bool retry = true;
    while (retry) {
      retry = false;
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
        if (c.color[u] == col) {
          ++col;
          retry = true;
          break;
        }
    }
    c.color[v] = col;
  }
}

/// Backtracking search for a partial Grundy coloring that uses color k.
/// The agenda holds outstanding requirements "vertex v needs a neighbor
/// of color i"; choice points are only the candidate vertex picked for
/// an unmet requirement, which makes the search exhaustive.
struct WitnessSearch {
  const Graph& g;
  std::vector<int> color;
  std::vector<std::pair<int, int>> agenda;
  std::chrono::steady_clock::time_point deadline;
  bool use_deadline = false;
  bool timed_out = false;
  long long nodes = 0;

  bool solve(size_t idx) {
    if (timed_out) return false;
    if ((++nodes & 1023) == 0 && use_deadline &&
        std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return false;
    }
    if (idx == agenda.size()) return true;
    auto [v, need] = agenda[idx];
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (color[u] == need) return solve(idx + 1);
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
      if (color[u] != 0) continue;
      bool clash = false;
      for (int w = g.neighbors(u).first(); w >= 0; w = g.neighbors(u).next(w))
        if (color[w] == need) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[u] = need;
      size_t mark = agenda.size();
      for (int i = need - 1; i >= 1; --i) agenda.emplace_back(u, i);
      if (solve(idx + 1)) return true;
      agenda.resize(mark);
      color[u] = 0;
      if (timed_out) return false;
    }
    return false;
  }

  /// Find a witness at level k; leaves the coloring in place on success.
  bool find(int k) {
    for (int r = 0; r < g.n(); ++r) {
      std::fill(color.begin(), color.end(), 0);
      agenda.clear();
      color[r] = k;
      for (int i = k - 1; i >= 1; --i) agenda.emplace_back(r, i);
      if (solve(0)) return true;
      if (timed_out) return false;
    }
    return false;
  }
};

/// Subset DP over residual vertex sets, n <= 20. Uses the identity
/// chi_FF(G) = 1 + max over maximal independent sets I of
/// chi_FF(G - I): the color-1 class of any Grundy coloring is a
/// maximal independent set, and any MIS can be ordered first.
struct SubsetDp {
  std::vector<uint32_t> nbr;
  std::unordered_map<uint32_t, std::pair<int, uint32_t>> memo;

  /// Maximal independent subsets of cand (duplicates possible; the
  /// memo absorbs them). Every completion must meet N[v] of the
  /// lowest candidate v, else v itself could be added.
  template <class F>
  void each_mis(uint32_t cur, uint32_t cand, const F& fn) {
    if (cand == 0) {
      fn(cur);
      return;
    }
    int v = std::countr_zero(cand);
    uint32_t choices = (nbr[v] & cand) | (uint32_t{1} << v);
    while (choices) {
      int u = std::countr_zero(choices);
      choices &= choices - 1;
      each_mis(cur | (uint32_t{1} << u), cand & ~(nbr[u] | (uint32_t{1} << u)),
               fn);
    }
  }

  /// (value, chosen color-1 class) for the induced subgraph on s.
  std::pair<int, uint32_t> solve(uint32_t s) {
    if (s == 0) return {0, 0};
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    int best = 0;
    uint32_t pick = 0;
    each_mis(0, s, [&](uint32_t i) {
      int sub = solve(s & ~i).first;
      if (1 + sub > best) {
        best = 1 + sub;
        pick = i;
      }
    });
    memo.emplace(s, std::make_pair(best, pick));
    return {best, pick};
  }
};

GrundyResult exact_by_subset_dp(const Graph& g) {
  SubsetDp dp;
  dp.nbr.assign(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      dp.nbr[v] |= uint32_t{1} << u;
  const uint32_t full = uint32_t((uint64_t{1} << g.n()) - 1);
  GrundyResult res;
  res.value = dp.solve(full).first;
  res.witness = Coloring(g.n());
  uint32_t s = full;
  for (int layer = 1; s != 0; ++layer) {
    uint32_t pick = dp.solve(s).second;
    for (uint32_t i = pick; i != 0; i &= i - 1)
      res.witness.color[std::countr_zero(i)] = layer;
    s &= ~pick;
  }
  return res;
}

}  // namespace

GrundyResult exact_grundy(const Graph& g, std::chrono::milliseconds timeout) {
  if (g.n() > kExactGrundyMaxN)
    throw std::invalid_argument("exact_grundy: n > 40");
  GrundyResult res;
  res.witness = Coloring(g.n());
  if (g.n() == 0) return res;
  if (g.n() <= 20) return exact_by_subset_dp(g);

  std::vector<int> identity(g.n());
  for (int i = 0; i < g.n(); ++i) identity[i] = i;
  res.witness = greedy_color(g, identity);
  res.value = res.witness.max_color();

  int ub = 0;
  for (int v = 0; v < g.n(); ++v) ub = std::max(ub, g.degree(v) + 1);

  WitnessSearch search{g};
  search.color.assign(g.n(), 0);
  if (timeout.count() > 0) {
    search.use_deadline = true;
    search.deadline = std::chrono::steady_clock::now() + timeout;
  }
  for (int k = res.value + 1; k <= ub; ++k) {
    if (!search.find(k)) break;
    res.value = k;
    res.witness.color = search.color;
  }
  if (search.timed_out) {
    res.status = SolveStatus::kTimeout;
    return res;
  }
  extend_greedy(g, res.witness);
  return res;
}

namespace {

struct OrderingOracle {
  const Graph& g;
  std::vector<int> color;
  int best = 0;

  void rec(int colored, int cur_max) {
    const int n = g.n();
    if (colored == n) {
      best = std::max(best, cur_max);
      return;
    }
    if (cur_max + (n - colored) <= best) return;
    for (int v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      uint64_t used = 0;
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
        if (color[u] > 0) used |= uint64_t{1} << (color[u] - 1);
      int c = std::countr_one(used) + 1;
      color[v] = c;
      rec(colored + 1, std::max(cur_max, c));
      color[v] = 0;
    }
  }
};

}  // namespace

int grundy_oracle_orderings(const Graph& g) {
  if (g.n() > kOracleMaxN)
    throw std::invalid_argument("grundy_oracle_orderings: n > 9");
  if (g.n() == 0) return 0;
  OrderingOracle o{g};
  o.color.assign(g.n(), 0);
  o.rec(0, 0);
  return o.best;
}

std::string PeelCertificate::serialize() const {
  std::ostringstream out;
  for (const auto& layer : layers) {
    bool first = true;
    for (int v = layer.first(); v >= 0; v = layer.next(v)) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

int min_degree_within(const Graph& g, const VertexSet& s) {
  int best = -1;
  for (int v = s.first(); v >= 0; v = s.next(v)) {
    VertexSet nb = g.neighbors(v);
    nb &= s;
    int d = nb.count();
    if (best == -1 || d < best) best = d;
  }
  return best;  // -1 for empty set
}

/// All maximal independent sets of g[alive], Bron-Kerbosch over the
/// non-adjacency relation, vertices taken in ascending order.
void enumerate_mis(const Graph& g, const VertexSet& alive,
                   VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  for (int v = p.first(); v >= 0; v = p.next(v)) {
    VertexSet nonnb = alive;
    nonnb.subtract(g.neighbors(v));
    nonnb.reset(v);
    VertexSet r2 = r;
    r2.set(v);
    enumerate_mis(g, alive, r2, p & nonnb, x & nonnb, out);
    p.reset(v);
    x.set(v);
  }
}

std::vector<VertexSet> all_mis(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  enumerate_mis(g, alive, VertexSet(g.n()), alive, VertexSet(g.n()), out);
  return out;
}

bool peel_rec(const Graph& g, const VertexSet& alive,
              std::vector<VertexSet>& layers) {
  if (alive.empty()) return true;
  int d = min_degree_within(g, alive);
  for (const VertexSet& mis : all_mis(g, alive)) {
    VertexSet rest = alive;
    rest.subtract(mis);
    if (!rest.empty() && min_degree_within(g, rest) < d - 1) continue;
    layers.push_back(mis);
    if (peel_rec(g, rest, layers)) return true;
    layers.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PeelCertificate> peel_certificate(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("peel_certificate: empty graph");
  PeelCertificate cert;
  if (!peel_rec(g, VertexSet::full(g.n()), cert.layers)) return std::nullopt;
  return cert;
}

bool is_valid_peel_certificate(const Graph& g, const PeelCertificate& cert) {
  VertexSet remaining = VertexSet::full(g.n());
  for (const VertexSet& layer : cert.layers) {
    if (layer.empty() || !layer.is_subset_of(remaining)) return false;
    // Independent in g.
    for (int v = layer.first(); v >= 0; v = layer.next(v))
      if (g.neighbors(v).intersects(layer)) return false;
    // Maximal within the remaining graph.
    VertexSet rest = remaining;
    rest.subtract(layer);
    for (int v = rest.first(); v >= 0; v = rest.next(v))
      if (!g.neighbors(v).intersects(layer)) return false;
    remaining = rest;
  }
  return remaining.empty();
}

Coloring coloring_from_certificate(const Graph& g,
                                   const PeelCertificate& cert) {
  if (!is_valid_peel_certificate(g, cert))
    throw std::invalid_argument("coloring_from_certificate: invalid layers");
  Coloring c(g.n());
  for (size_t j = 0; j < cert.layers.size(); ++j)
    for (int v = cert.layers[j].first(); v >= 0; v = cert.layers[j].next(v))
      c.color[v] = int(j) + 1;
  return c;
}

}  // namespace grundy
