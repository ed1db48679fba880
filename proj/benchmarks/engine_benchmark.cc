#include <random>

#include "benchmark/benchmark.h"
#include "copermanent/engine.hpp"

namespace copermanent {
namespace {

Graph half_density_graph(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng() & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

void BM_BivariatePermanent(benchmark::State& state) {
  const Graph g = half_density_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bivariate_permanent(g));
  state.SetComplexityN(state.range(0));
}
// 13 is the last order on the 64-bit accumulator; 14 and up use 128-bit.
BENCHMARK(BM_BivariatePermanent)->DenseRange(4, 16)->Unit(benchmark::kMicrosecond);

void BM_BivariatePermanentNaive(benchmark::State& state) {
  const Graph g = half_density_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bivariate_permanent_naive(g));
}
BENCHMARK(BM_BivariatePermanentNaive)->DenseRange(4, 9)->Unit(benchmark::kMicrosecond);

void BM_IntegerPermanent(benchmark::State& state) {
  const Graph g = half_density_graph(static_cast<int>(state.range(0)));
  const IntMatrix m = instantiate(g, 2, -3);
  for (auto _ : state) benchmark::DoNotOptimize(integer_permanent(m));
}
BENCHMARK(BM_IntegerPermanent)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace copermanent
