// Compares the filtering reference enumerator against the pruned search,
// serial and parallel.
#include <benchmark/benchmark.h>

#include "fcd/fc_enum.hpp"

namespace {

void BM_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fcd::fc_words_reference(n));
}
BENCHMARK(BM_reference)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_pruned_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fcd::fc_words_serial(n));
}
BENCHMARK(BM_pruned_serial)->Arg(5)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_pruned_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fcd::fc_words(n));
}
BENCHMARK(BM_pruned_parallel)->Arg(5)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_count_only(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fcd::fc_count(n));
}
BENCHMARK(BM_count_only)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
