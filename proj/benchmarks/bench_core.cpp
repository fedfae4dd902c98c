#include <benchmark/benchmark.h>

#include "frieze/eta.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/polygon.hpp"
#include "frieze/similarity.hpp"
#include "frieze/supplement.hpp"

namespace {

using namespace frieze;

const Sequence kHeptagon{4, 2, 1, 3, 2, 2, 1};

void BM_IsEta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_eta(kHeptagon));
}
BENCHMARK(BM_IsEta);

void BM_GenerateFrieze(benchmark::State& state) {
  const Sequence q = fan(static_cast<std::int64_t>(state.range(0)) - 3).entries();
  for (auto _ : state) benchmark::DoNotOptimize(generate_frieze(q));
}
BENCHMARK(BM_GenerateFrieze)->Arg(8)->Arg(16)->Arg(32);

void BM_CountFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_types(n));
}
BENCHMARK(BM_CountFormula)->Arg(13)->Arg(16)->Arg(30);

void BM_CountBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_types(n, CountMethod::kBrute));
}
BENCHMARK(BM_CountBrute)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_EnumerateTypes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(n));
}
BENCHMARK(BM_EnumerateTypes)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Supplement(benchmark::State& state) {
  const BasicSeq a({1, 2, 2, 6, 2, 4, 3, 2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(supplement(a));
}
BENCHMARK(BM_Supplement);

}  // namespace
BENCHMARK_MAIN();
