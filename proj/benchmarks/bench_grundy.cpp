#include <benchmark/benchmark.h>

#include "grundy/generators.hpp"
#include "grundy/grundy.hpp"

namespace {

using namespace grundy;

void BM_ExactGrundyGnp(benchmark::State& state) {
  Graph g = random_gnp(int(state.range(0)), 0.4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_grundy(g).value);
  }
}
BENCHMARK(BM_ExactGrundyGnp)->Arg(8)->Arg(12)->Arg(16);

void BM_ExactGrundyTree(benchmark::State& state) {
  Graph g = tree_tk(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_grundy(g).value);
  }
}
BENCHMARK(BM_ExactGrundyTree)->Arg(4)->Arg(5)->Arg(6);

void BM_OrderingOracle(benchmark::State& state) {
  Graph g = random_gnp(int(state.range(0)), 0.5, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grundy_oracle_orderings(g));
  }
}
BENCHMARK(BM_OrderingOracle)->Arg(7)->Arg(8);

void BM_GreedyColor(benchmark::State& state) {
  Graph g = random_gnp(int(state.range(0)), 0.3, 3);
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_color(g, order).max_color());
  }
}
BENCHMARK(BM_GreedyColor)->Arg(64)->Arg(256);

}  // namespace
