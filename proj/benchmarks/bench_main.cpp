#include <benchmark/benchmark.h>

#include "minorcolor/claims.hpp"
#include "minorcolor/encoding.hpp"
#include "minorcolor/enumerate.hpp"
#include "minorcolor/minor.hpp"

using namespace minorcolor;

namespace {

SimpleGraph petersen() {
  return SimpleGraph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                          {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                          {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
}

void BM_EnumerateConnected(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto graphs = enumerate_connected_graphs(n);
    benchmark::DoNotOptimize(graphs.size());
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(4)->Arg(5)->Arg(6);

void BM_HadwigerPetersen(benchmark::State& state) {
  SimpleGraph g = petersen();
  for (auto _ : state) {
    int h = hadwiger_number(g);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HadwigerPetersen);

void BM_ExpandReducedSplitProduct(benchmark::State& state) {
  SimpleGraph k4 = SimpleGraph::complete(4);
  EncodingContext ctx = EncodingContext::standard(k4, 4, 7, PrimeMode::SmallPrime);
  for (auto _ : state) {
    FieldPoly f = build_S(ctx, {1, 2}).expand_reduced();
    benchmark::DoNotOptimize(f.term_count());
  }
}
BENCHMARK(BM_ExpandReducedSplitProduct);

void BM_PolyColorablePetersen(benchmark::State& state) {
  SimpleGraph g = petersen();
  for (auto _ : state) {
    bool c = poly_colorable(g, 3, 5, kDefaultEvalBudget);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PolyColorablePetersen);

void BM_StepPipelineCycle(benchmark::State& state) {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  Budgets budgets;
  for (auto _ : state) {
    auto reports = verify_step_pipeline(c4, {1, 2}, 3, 5, budgets, false);
    benchmark::DoNotOptimize(reports.size());
  }
}
BENCHMARK(BM_StepPipelineCycle);

}  // namespace

BENCHMARK_MAIN();
