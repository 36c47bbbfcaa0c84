#include "doctest.h"

#include "grundy/cobipartite.hpp"
#include "grundy/detect.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph6.hpp"
#include "grundy/invariants.hpp"

using namespace grundy;

TEST_CASE("tree family sizes and shape") {
  CHECK(tree_tk(1).n() == 1);
  CHECK(tree_tk(2).n() == 2);
  CHECK(tree_tk(2).m() == 1);
  // T_3 doubles T_2: a path on 4 vertices up to isomorphism.
  Graph t3 = tree_tk(3);
  CHECK(t3.n() == 4);
  CHECK(t3.m() == 3);
  CHECK(contains_induced(path(4), t3).has_value());
  for (int k = 2; k <= 8; ++k) {
    Graph t = tree_tk(k);
    CHECK(t.n() == (1 << (k - 1)));
    CHECK(t.m() == t.n() - 1);
    CHECK(is_connected(t));
    CHECK(!girth(t).has_value());  // acyclic
  }
  CHECK_THROWS(tree_tk(0));
  CHECK_THROWS(tree_tk(11));
}

TEST_CASE("small fixed families") {
  CHECK(to_graph6(cycle(3)) == to_graph6(complete(3)));
  Graph c4 = complete_bipartite(2, 2);
  CHECK(c4.m() == 4);
  CHECK(girth(c4) == 4);
  CHECK(path(1).m() == 0);
  Graph pet = petersen();
  CHECK(pet.n() == 10);
  CHECK(pet.m() == 15);
  CHECK(girth(pet) == 5);
}

TEST_CASE("random k-trees are chordal with the right parameters") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_ktree(14, 3, seed);
    CHECK(g.n() == 14);
    CHECK(std::holds_alternative<EliminationOrdering>(is_chordal(g)));
    CHECK(degrees(g).min_degree == 3);
    CHECK(clique_number(g) == 4);
    CHECK(coloring_number(g) == 4);
  }
  CHECK(to_graph6(random_ktree(4, 3, 0)) == to_graph6(complete(4)));
  CHECK_THROWS(random_ktree(3, 3, 0));
}

TEST_CASE("chain graphs") {
  // Extremes: all-full thresholds give K_{a,b}, all-zero no edges.
  Graph full = chain_graph_from_thresholds(3, 4, {4, 4, 4});
  CHECK(to_graph6(full) == to_graph6(complete_bipartite(3, 4)));
  Graph none = chain_graph_from_thresholds(2, 3, {0, 0});
  CHECK(none.m() == 0);
  CHECK_THROWS(chain_graph_from_thresholds(2, 3, {4, 0}));
  CHECK_THROWS(chain_graph_from_thresholds(2, 3, {1}));

  for (uint64_t seed = 0; seed < 50; ++seed) {
    Graph h = chain_graph(5, 6, seed);
    CHECK(h.n() == 11);
    CHECK(is_2k2_free(h));
    CHECK(bipartition(h).ok);
  }
}

TEST_CASE("projective plane incidence graphs") {
  Graph h2 = incidence_projective_plane(2);
  CHECK(h2.n() == 14);
  CHECK(h2.m() == 21);
  CHECK(degrees(h2).min_degree == 3);
  CHECK(degrees(h2).max_degree == 3);
  CHECK(girth(h2) == 6);
  CHECK(!has_induced_c4(h2));

  Graph h3 = incidence_projective_plane(3);
  CHECK(h3.n() == 26);
  CHECK(degrees(h3).min_degree == 4);
  CHECK(girth(h3) == 6);

  Graph h5 = incidence_projective_plane(5);
  CHECK(h5.n() == 62);
  CHECK(degrees(h5).min_degree == 6);
  CHECK(!has_induced_c4(h5));

  CHECK_THROWS(incidence_projective_plane(4));
}

TEST_CASE("gnp determinism and extremes") {
  CHECK(to_graph6(random_gnp(12, 0.5, 7)) == to_graph6(random_gnp(12, 0.5, 7)));
  CHECK(to_graph6(random_gnp(12, 0.5, 7)) != to_graph6(random_gnp(12, 0.5, 8)));
  CHECK(random_gnp(10, 0.0, 1).m() == 0);
  CHECK(random_gnp(10, 1.0, 1).m() == 45);
  CHECK_THROWS(random_gnp(5, 1.5, 0));
}

TEST_CASE("labeled graph stream") {
  CHECK(LabeledGraphStream(3).count() == 8);
  CHECK(LabeledGraphStream(4).count() == 64);
  CHECK(LabeledGraphStream(7).count() == 1LL << 21);
  CHECK_THROWS(LabeledGraphStream(8));

  LabeledGraphStream s(3);
  CHECK(s.get(0).m() == 0);
  CHECK(s.get(7).m() == 3);  // all three pairs set: K_3
  // Bit 0 is pair (0,1), bit 1 is (0,2), bit 2 is (1,2).
  Graph g5 = s.get(5);
  CHECK(g5.adjacent(0, 1));
  CHECK(!g5.adjacent(0, 2));
  CHECK(g5.adjacent(1, 2));
  CHECK_THROWS(s.get(8));
}

TEST_CASE("make_graph dispatch") {
  GenSpec tk;
  tk.family = "tk";
  tk.k = 4;
  CHECK(make_graph(tk).n() == 8);

  GenSpec gnp;
  gnp.family = "gnp";
  gnp.n = 9;
  gnp.p = 0.3;
  gnp.seed = 5;
  CHECK(to_graph6(make_graph(gnp)) == to_graph6(random_gnp(9, 0.3, 5)));

  GenSpec bad;
  bad.family = "nope";
  CHECK_THROWS(make_graph(bad));
}
