#include <random>

#include "benchmark/benchmark.h"
#include "copermanent/enumerate.hpp"
#include "copermanent/survey.hpp"

namespace copermanent {
namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(99);
  std::vector<Graph> graphs;
  for (int k = 0; k < 64; ++k) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (rng() & 1U) edges.emplace_back(i, j);
      }
    }
    graphs.push_back(Graph::from_edges(n, edges));
  }
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(graphs[next++ % graphs.size()]));
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 10);

void BM_GenerateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_all(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateAll)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_SurveyEight(benchmark::State& state) {
  const auto graphs = generate_all(8);
  SurveyOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(source_from(graphs), 8, options));
}
BENCHMARK(BM_SurveyEight)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace copermanent
