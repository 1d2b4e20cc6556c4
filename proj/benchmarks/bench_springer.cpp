#include <benchmark/benchmark.h>

#include "springer/char2.hpp"
#include "springer/spin.hpp"
#include "springer/symbols.hpp"

namespace {

using namespace springer;

void BM_EnumerateFamily(benchmark::State& state) {
  const SymbolParams params{4, 1, DefectSet::odd};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_family(params, n));
}
BENCHMARK(BM_EnumerateFamily)->DenseRange(4, 12, 4);

void BM_SimilarityClasses(benchmark::State& state) {
  const SymbolParams params{4, 0, DefectSet::positive_odd};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(similarity_classes(params, n));
}
BENCHMARK(BM_SimilarityClasses)->DenseRange(4, 10, 3);

void BM_Correspondence(benchmark::State& state) {
  const auto group = static_cast<GroupCase>(state.range(0));
  for (auto _ : state) {
    Correspondence corr(group, 8);
    benchmark::DoNotOptimize(corr.entries().size());
  }
}
BENCHMARK(BM_Correspondence)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SpinTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& lambda : spin::enumerate_xn(n)) benchmark::DoNotOptimize(spin::spin_springer(lambda));
  }
}
BENCHMARK(BM_SpinTable)->Arg(10)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
