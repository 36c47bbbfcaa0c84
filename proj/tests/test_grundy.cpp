#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "grundy/generators.hpp"
#include "grundy/graph6.hpp"
#include "grundy/grundy.hpp"
#include "grundy/invariants.hpp"
#include "grundy/rng.hpp"

using namespace grundy;

namespace {

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> random_order(int n, uint64_t seed) {
  std::vector<int> order = identity_order(n);
  SplitMix64 rng(seed);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.next_below(uint64_t(i) + 1)]);
  return order;
}

VertexSet random_subset(int n, uint64_t seed) {
  SplitMix64 rng(seed);
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (rng.next() & 1) s.set(v);
  return s;
}

}  // namespace

TEST_CASE("greedy coloring basics") {
  Graph k4 = complete(4);
  Coloring c = greedy_color(k4, identity_order(4));
  CHECK(c.max_color() == 4);
  CHECK(is_grundy_coloring(k4, c));

  // P_4 = 0-1-2-3 in order 0,3,1,2 needs three colors.
  Graph p4 = path(4);
  Coloring cp = greedy_color(p4, {0, 3, 1, 2});
  CHECK(cp.max_color() == 3);
  CHECK(cp.color == std::vector<int>{1, 2, 3, 1});

  // Any order on a complete bipartite graph uses exactly two colors.
  Graph k33 = complete_bipartite(3, 3);
  for (uint64_t s = 0; s < 50; ++s)
    CHECK(greedy_color(k33, random_order(6, s)).max_color() == 2);
}

TEST_CASE("greedy color of v never exceeds deg(v)+1") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_gnp(20, 0.4, seed);
    Coloring c = greedy_color(g, random_order(20, seed + 1000));
    CHECK(c.total());
    CHECK(is_grundy_coloring(g, c));
    for (int v = 0; v < 20; ++v) CHECK(c.color[v] <= g.degree(v) + 1);
  }
  // More than 64 colors: K_70 exercises the wide-color fallback.
  Graph k70 = complete(70);
  CHECK(greedy_color(k70, identity_order(70)).max_color() == 70);
}

TEST_CASE("is_grundy_coloring rejects bad colorings") {
  Graph c4 = cycle(4);
  Coloring good(4);
  good.color = {1, 2, 1, 2};
  CHECK(is_grundy_coloring(c4, good));

  Coloring improper(4);
  improper.color = {1, 1, 2, 2};  // vertices 0,1 adjacent
  CHECK(!is_grundy_coloring(c4, improper));

  Graph p3 = path(3);
  Coloring gap(3);
  gap.color = {1, 3, 1};  // middle vertex has no neighbor of color 2
  CHECK(!is_grundy_coloring(p3, gap));

  Coloring partial(3);
  partial.color = {1, 2, 0};
  CHECK(!is_grundy_coloring(p3, partial));  // not total
  CHECK(is_partial_grundy(p3, partial));
}

TEST_CASE("is_partial_grundy") {
  Graph c5 = cycle(5);
  Coloring none(5);
  CHECK(is_partial_grundy(c5, none));  // empty support

  Coloring clash(5);
  clash.color[0] = 1;
  clash.color[1] = 1;  // adjacent, same color
  CHECK(!is_partial_grundy(c5, clash));

  // Support must witness lower colors inside the support.
  Coloring lone(5);
  lone.color[0] = 2;
  CHECK(!is_partial_grundy(c5, lone));
  lone.color[1] = 1;
  CHECK(is_partial_grundy(c5, lone));
}

TEST_CASE("exact grundy on known graphs") {
  CHECK(exact_grundy(complete(6)).value == 6);
  CHECK(exact_grundy(complete_bipartite(4, 4)).value == 2);
  CHECK(exact_grundy(complete_bipartite(1, 7)).value == 2);
  CHECK(exact_grundy(path(4)).value == 3);
  CHECK(exact_grundy(cycle(4)).value == 2);
  CHECK(exact_grundy(cycle(5)).value == 3);
  CHECK(exact_grundy(petersen()).value == 4);
  CHECK(exact_grundy(Graph{}).value == 0);
  CHECK(exact_grundy(from_edge_list("1\n")).value == 1);
  CHECK_THROWS(exact_grundy(random_gnp(41, 0.1, 1)));
}

TEST_CASE("exact grundy witness is a grundy coloring attaining the value") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_gnp(12, 0.35, seed);
    GrundyResult r = exact_grundy(g);
    REQUIRE(r.status == SolveStatus::kOk);
    CHECK(is_grundy_coloring(g, r.witness));
    CHECK(r.witness.max_color() == r.value);
    CHECK(r.value >= chromatic_number_exact(g));
    int maxdeg = degrees(g).max_degree.value_or(-1);
    CHECK(r.value <= maxdeg + 1);
  }
}

TEST_CASE("exact grundy matches the ordering oracle") {
  // Exhaustive on n <= 5.
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphStream stream(n);
    for (long long i = 0; i < stream.count(); ++i) {
      Graph g = stream.get(i);
      CHECK(exact_grundy(g).value == grundy_oracle_orderings(g));
    }
  }
  // Random on n = 6..9.
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 6 + int(seed % 4);
    Graph g = random_gnp(n, 0.2 + 0.1 * double(seed % 6), seed);
    CHECK(exact_grundy(g).value == grundy_oracle_orderings(g));
  }
}

TEST_CASE("ordering oracle spot values") {
  CHECK(grundy_oracle_orderings(path(4)) == 3);
  CHECK(grundy_oracle_orderings(cycle(5)) == 3);
  CHECK(grundy_oracle_orderings(complete(5)) == 5);
  CHECK(grundy_oracle_orderings(complete_bipartite(3, 3)) == 2);
  CHECK(grundy_oracle_orderings(tree_tk(4)) == 4);
  CHECK_THROWS(grundy_oracle_orderings(petersen()));  // n = 10 > cap
}

TEST_CASE("grundy number of induced subgraphs never exceeds the whole") {
  int done = 0;
  for (uint64_t seed = 0; done < 500; ++seed) {
    int n = 5 + int(seed % 5);  // 5..9
    Graph g = random_gnp(n, 0.4, seed);
    VertexSet s = random_subset(n, seed ^ 0xabcdef);
    if (s.count() == 0) continue;
    Graph h = induced_subgraph(g, s);
    int gh = exact_grundy(h).value;
    CHECK(gh <= exact_grundy(g).value);

    // The subgraph witness, mapped back, is partial-Grundy in g.
    Coloring sub = exact_grundy(h).witness;
    Coloring lifted(n);
    std::vector<int> verts = s.members();
    for (int i = 0; i < int(verts.size()); ++i)
      lifted.color[verts[i]] = sub.color[i];
    CHECK(is_partial_grundy(g, lifted));
    ++done;
  }
}

TEST_CASE("small-n and large-n solver paths agree") {
  // Padding a graph with isolated vertices pushes it past the subset-DP
  // size threshold without changing its grundy number (isolated
  // vertices only ever take color 1).
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 5 + int(seed % 6);  // 5..10
    Graph g = random_gnp(n, 0.35, seed);
    Graph::Builder b(24);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    Graph padded = std::move(b).build();
    CHECK(exact_grundy(padded).value ==
          std::max(1, exact_grundy(g).value));
  }
  // Known values beyond the subset-DP range.
  CHECK(exact_grundy(cycle(30)).value == 3);
  CHECK(exact_grundy(complete_bipartite(15, 15)).value == 2);
  CHECK(exact_grundy(complete(25)).value == 25);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = random_gnp(22, 0.15, seed);
    GrundyResult r = exact_grundy(g);
    CHECK(is_grundy_coloring(g, r.witness));
    CHECK(r.witness.max_color() == r.value);
  }
}

TEST_CASE("trees T_k attain grundy number k") {
  for (int k = 1; k <= 6; ++k) {
    Graph t = tree_tk(k);
    CHECK(t.n() == (k == 1 ? 1 : (1 << (k - 1))));
    CHECK(exact_grundy(t).value == k);
  }
}

TEST_CASE("timeout reports kTimeout") {
  Graph g = random_gnp(38, 0.5, 9);
  GrundyResult r = exact_grundy(g, std::chrono::milliseconds(1));
  // Either it finished extremely fast or it reports a timeout; a timed
  // out result still carries a proven lower bound.
  int maxdeg = degrees(g).max_degree.value_or(-1);
  CHECK(r.value >= 0);
  CHECK(r.value <= maxdeg + 1);
  // The carried witness backs the reported value in either case.
  CHECK(is_partial_grundy(g, r.witness));
  CHECK(r.witness.max_color() == r.value);
}

TEST_CASE("peel certificates") {
  // Complete graphs peel one singleton per layer.
  auto kc = peel_certificate(complete(5));
  REQUIRE(kc.has_value());
  CHECK(kc->layers.size() == 5);
  CHECK(is_valid_peel_certificate(complete(5), *kc));
  Coloring col = coloring_from_certificate(complete(5), *kc);
  CHECK(is_grundy_coloring(complete(5), col));
  CHECK(col.max_color() == 5);

  // C_5: any MIS removal drops delta from 2 to 0.
  CHECK(!peel_certificate(cycle(5)).has_value());

  // Layer count is at least delta + 1 whenever a certificate exists.
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_gnp(9, 0.35, seed);
    auto cert = peel_certificate(g);
    if (!cert.has_value()) continue;
    CHECK(is_valid_peel_certificate(g, *cert));
    int delta = degrees(g).min_degree.value_or(0);
    CHECK(int(cert->layers.size()) >= delta + 1);
    Coloring c = coloring_from_certificate(g, *cert);
    CHECK(is_grundy_coloring(g, c));
    CHECK(c.max_color() == int(cert->layers.size()));
    CHECK(exact_grundy(g).value >= int(cert->layers.size()));
  }

  // Invalid certificates are rejected.
  PeelCertificate bogus;
  bogus.layers.push_back(VertexSet(5));
  CHECK(!is_valid_peel_certificate(complete(5), bogus));
  CHECK_THROWS(coloring_from_certificate(complete(5), bogus));
}

TEST_CASE("coloring serialization") {
  Coloring c(3);
  c.color = {1, 0, 2};
  CHECK(c.serialize() == "0:1\n2:2\n");
  CHECK(c.colored_count() == 2);
  CHECK(!c.total());
}
