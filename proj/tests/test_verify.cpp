#include "doctest.h"

#include <sstream>

#include "grundy/cobipartite.hpp"
#include "grundy/detect.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph6.hpp"
#include "grundy/verify.hpp"

using namespace grundy;

TEST_CASE("source sizes and membership") {
  AllLabeledSource labeled(1, 4);
  CHECK(labeled.size() == 1 + 2 + 8 + 64);
  CHECK(labeled.get(0).n() == 1);
  CHECK(labeled.get(labeled.size() - 1).n() == 4);

  AllBipartiteSource bip(4);
  CHECK(bip.size() > 0);
  for (long long i = 0; i < bip.size(); ++i)
    CHECK(bipartition(bip.get(i)).ok);

  G6LinesSource g6({"Bw", "Bg"});
  CHECK(g6.size() == 2);
  CHECK(g6.get(0).m() == 3);

  GenSpec spec;
  spec.family = "gnp";
  spec.n = 8;
  spec.p = 0.4;
  spec.seed = 123;
  GenSpecSource gen(spec, 10);
  CHECK(gen.size() == 10);
  CHECK(to_graph6(gen.get(3)) == to_graph6(gen.get(3)));
  CHECK(to_graph6(gen.get(3)) != to_graph6(gen.get(4)));
}

TEST_CASE("conjecture check passes on known C4-free graphs") {
  VectorSource src({cycle(5), petersen(), complete(4), tree_tk(4),
                    incidence_projective_plane(2)});
  VerifyOptions opt;
  std::ostringstream csv;
  VerifyReport rep = run_check(conjecture_check(), src, opt, &csv, nullptr);
  CHECK(rep.summary.exit_code == 0);
  CHECK(rep.summary.failed == 0);
  CHECK(rep.summary.passed == 5);
  CHECK(csv.str().find("delta+1") != std::string::npos);
  CHECK(csv.str().find("runtime") == std::string::npos);
}

TEST_CASE("graphs with an induced C4 are skipped by the conjecture check") {
  VectorSource src({cycle(4), complete_bipartite(2, 3)});
  VerifyOptions opt;
  VerifyReport rep = run_check(conjecture_check(), src, opt, nullptr, nullptr);
  CHECK(rep.summary.skipped == 2);
  CHECK(rep.summary.exit_code == 0);
}

TEST_CASE("planted offset produces a reproducible failure") {
  VectorSource src({complete(3)});
  VerifyOptions opt;
  opt.plant_offset = 2;  // pretends the bound is delta+3
  std::ostringstream dump;
  VerifyReport rep = run_check(conjecture_check(), src, opt, nullptr, &dump);
  CHECK(rep.summary.exit_code == 1);
  CHECK(rep.summary.failed == 1);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].g6 == "Bw");
  CHECK(dump.str().find("Bw") != std::string::npos);
}

TEST_CASE("csv output is byte-identical across worker counts") {
  AllLabeledSource src(1, 5);
  std::string out[2];
  int workers[2] = {1, 4};
  for (int i = 0; i < 2; ++i) {
    VerifyOptions opt;
    opt.workers = workers[i];
    std::ostringstream csv;
    VerifyReport rep = run_check(conjecture_check(), src, opt, &csv, nullptr);
    CHECK(rep.summary.exit_code == 0);
    out[i] = csv.str();
  }
  CHECK(out[0] == out[1]);
  CHECK(!out[0].empty());
}

TEST_CASE("chordal bound check with exact re-verification stride") {
  std::vector<Graph> graphs;
  for (uint64_t seed = 0; seed < 30; ++seed)
    graphs.push_back(random_ktree(12, 2 + int(seed % 3), seed));
  VectorSource src(std::move(graphs));
  VerifyOptions opt;
  opt.chordal_exact_stride = 5;
  VerifyReport rep =
      run_check(chordal_bound_check(), src, opt, nullptr, nullptr);
  CHECK(rep.summary.exit_code == 0);
  CHECK(rep.summary.passed == 30);
}

TEST_CASE("cobipartite bound check on bipartite inputs") {
  std::vector<Graph> graphs;
  for (uint64_t seed = 0; seed < 20; ++seed)
    graphs.push_back(chain_graph(4, 4, seed));
  graphs.push_back(complete_bipartite(3, 3));
  VectorSource src(std::move(graphs));
  VerifyOptions opt;
  VerifyReport rep = run_check(cobip_bound_check(), src, opt, nullptr, nullptr);
  CHECK(rep.summary.exit_code == 0);
  CHECK(rep.summary.failed == 0);
}

TEST_CASE("log bound check") {
  VectorSource src({petersen(), incidence_projective_plane(2), cycle(7)});
  VerifyOptions opt;
  VerifyReport rep = run_check(log_bound_check(2), src, opt, nullptr, nullptr);
  CHECK(rep.summary.exit_code == 0);
  CHECK(rep.summary.failed == 0);
  CHECK(rep.summary.passed >= 2);
}

TEST_CASE("coloring-number bound check on chordal graphs") {
  std::vector<Graph> graphs = {complete(5), path(6), tree_tk(4)};
  for (uint64_t seed = 0; seed < 10; ++seed)
    graphs.push_back(random_ktree(10, 3, seed));
  VectorSource src(std::move(graphs));
  VerifyOptions opt;
  VerifyReport rep = run_check(remark1_check(), src, opt, nullptr, nullptr);
  CHECK(rep.summary.exit_code == 0);
  CHECK(rep.summary.failed == 0);
}

TEST_CASE("csv rows carry graph properties") {
  VectorSource src({petersen()});
  VerifyOptions opt;
  VerifyReport rep =
      run_check(conjecture_check(), src, opt, nullptr, nullptr, true);
  REQUIRE(rep.rows.size() == 1);
  const VerifyRow& r = rep.rows[0];
  CHECK(r.n == 10);
  CHECK(r.m == 15);
  CHECK(r.delta == 3);
  CHECK(r.max_deg == 3);
  CHECK(r.girth == 5);
  CHECK(r.c4free);
  CHECK(r.triangle_free);
  CHECK(!r.chordal);
  CHECK(!r.bipartite);
  CHECK(r.chi_ff == 4);
  CHECK(r.holds);
}

TEST_CASE("summary json") {
  VerifySummary s;
  s.checked = 10;
  s.passed = 9;
  s.skipped = 1;
  std::string j = summary_json(s, "demo");
  CHECK(j.find("\"checked\": 10") != std::string::npos);
  CHECK(j.find("\"status\": \"PASS\"") != std::string::npos);
  CHECK(j.find("demo") != std::string::npos);
}

TEST_CASE("family probe smoke test") {
  ProbeOptions opt;
  opt.ell = 2;
  opt.samples = 50;
  opt.n_min = 6;
  opt.n_max = 8;
  opt.delta_min = 1;
  opt.delta_max = 4;
  auto buckets = family_probe_kll(opt);
  for (const auto& [delta, b] : buckets) {
    CHECK(delta >= 1);
    CHECK(delta <= 4);
    CHECK(b.count > 0);
    CHECK(b.min_chi_ff >= 1);
  }
  // Deterministic for a fixed seed.
  auto again = family_probe_kll(opt);
  CHECK(buckets.size() == again.size());
  for (const auto& [delta, b] : buckets) {
    CHECK(again[delta].count == b.count);
    CHECK(again[delta].min_chi_ff == b.min_chi_ff);
  }
}
