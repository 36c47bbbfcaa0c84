#include <benchmark/benchmark.h>

#include "grundy/detect.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph6.hpp"
#include "grundy/invariants.hpp"

namespace {

using namespace grundy;

void BM_Graph6RoundTrip(benchmark::State& state) {
  Graph g = random_gnp(int(state.range(0)), 0.5, 5);
  std::string s = to_graph6(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_graph6(from_graph6(s)));
  }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(16)->Arg(128);

void BM_C4FreeScan(benchmark::State& state) {
  Graph g = random_gnp(int(state.range(0)), 0.1, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_induced_c4(g));
  }
}
BENCHMARK(BM_C4FreeScan)->Arg(32)->Arg(128);

void BM_Chordality(benchmark::State& state) {
  Graph g = random_ktree(int(state.range(0)), 3, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_chordal(g).index());
  }
}
BENCHMARK(BM_Chordality)->Arg(16)->Arg(64);

void BM_ColoringNumber(benchmark::State& state) {
  Graph g = random_gnp(int(state.range(0)), 0.2, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coloring_number(g));
  }
}
BENCHMARK(BM_ColoringNumber)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
