#ifndef GRUNDY_GRUNDY_HPP
#define GRUNDY_GRUNDY_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Vertex -> color in 1..k; 0 means uncolored.
struct Coloring {
  std::vector<int> color;

  Coloring() = default;
  explicit Coloring(int n) : color(n, 0) {}

  int max_color() const;
  bool total() const;
  int colored_count() const;

  /// "v:c" CSV lines, colored vertices only.
  std::string serialize() const;
};

/// First-Fit along the given order. Requires order to be a permutation.
Coloring greedy_color(const Graph& g, const std::vector<int>& order);

/// Proper, total, and every vertex colored j has a neighbor of each
/// color i < j.
bool is_grundy_coloring(const Graph& g, const Coloring& c);

/// The restriction to the colored support is a Grundy coloring of the
/// induced subgraph on that support.
bool is_partial_grundy(const Graph& g, const Coloring& c);

inline constexpr int kExactGrundyMaxN = 40;

enum class SolveStatus { kOk, kTimeout };

struct GrundyResult {
  SolveStatus status = SolveStatus::kOk;
  int value = 0;           // exact when kOk; best proven lower bound on
                           // timeout
  Coloring witness;        // Grundy coloring of an induced subgraph, max
                           // color == value
};

/// Exact Grundy number by iterative-deepening witness search. A level-k
/// witness is a partial Grundy coloring using color k; it extends
/// greedily to a Grundy coloring of the whole graph with >= k colors,
/// so max witness level equals chi_FF. n <= 40; zero timeout = none.
GrundyResult exact_grundy(const Graph& g,
                          std::chrono::milliseconds timeout = {});

inline constexpr int kOracleMaxN = 9;

/// Brute-force oracle: max greedy color count over all n! orderings.
int grundy_oracle_orderings(const Graph& g);

/// Ordered maximal-independent-set layers; layer j is a MIS of the graph
/// with layers 1..j-1 removed.
struct PeelCertificate {
  std::vector<VertexSet> layers;

  /// One layer per line, space-separated vertices.
  std::string serialize() const;
};

/// Layering in which every peel drops the minimum degree by at most one
/// (delta(G - I) >= delta(G) - 1) until the graph is empty. Exhaustive
/// backtracking over maximal independent sets; None when no such
/// layering exists.
std::optional<PeelCertificate> peel_certificate(const Graph& g);

bool is_valid_peel_certificate(const Graph& g, const PeelCertificate& cert);

/// Color layer j with j. Throws on invalid certificates; the result
/// always passes is_grundy_coloring.
Coloring coloring_from_certificate(const Graph& g, const PeelCertificate& c);

}  // namespace grundy

#endif  // GRUNDY_GRUNDY_HPP
