#ifndef GRUNDY_INVARIANTS_HPP
#define GRUNDY_INVARIANTS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "grundy/graph.hpp"

namespace grundy {

/// Exact fraction, always stored reduced with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& o) const;
  std::string str() const;
};

/// Shortest cycle length; nullopt when the graph is a forest.
std::optional<int> girth(const Graph& g);

bool has_triangle(const Graph& g);

/// |E| / |V| as an exact fraction. Requires n >= 1.
Rational rho(const Graph& g);

/// col(G) = degeneracy + 1 by smallest-last peeling (ties: lowest index).
/// Returns 0 for the empty graph.
int coloring_number(const Graph& g);

/// Exact chromatic number, n <= 16.
int chromatic_number_exact(const Graph& g);

/// Exact clique number, n <= 64.
int clique_number(const Graph& g);

inline constexpr int kChromaticMaxN = 16;
inline constexpr int kCliqueMaxN = 64;

}  // namespace grundy

#endif  // GRUNDY_INVARIANTS_HPP
