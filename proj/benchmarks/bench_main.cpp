#include "permdesign/charlier.hpp"
#include "permdesign/combinatorics.hpp"
#include "permdesign/constructions.hpp"
#include "permdesign/design.hpp"
#include "permdesign/search.hpp"

#include <benchmark/benchmark.h>

using namespace permdesign;

static void BM_Rencontres20(benchmark::State& state) {
  for (auto _ : state) {
    RencontresTable table = rencontres(20);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_Rencontres20);

static void BM_OrthogonalityN16(benchmark::State& state) {
  for (auto _ : state) {
    OrthogonalityReport report = verify_orthogonality(16);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_OrthogonalityN16);

static void BM_FrequenciesTwistedAffine(benchmark::State& state) {
  PermSet set = twisted_affine_9();
  for (auto _ : state) {
    FrequencyVector freq = frequencies(set, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(freq);
  }
}
BENCHMARK(BM_FrequenciesTwistedAffine)->Arg(1)->Arg(2)->Arg(4);

static void BM_AnalyzePGL25(benchmark::State& state) {
  PermSet set = pgl2(5);
  for (auto _ : state) {
    DesignReport report = analyze(set, 3);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_AnalyzePGL25);

static void BM_LatinSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SharpSearchResult result = search_sharp_set(n, 1);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_LatinSearch)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
