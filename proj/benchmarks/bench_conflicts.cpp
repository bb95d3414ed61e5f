#include <benchmark/benchmark.h>

#include "optrepair/conflicts.hpp"
#include "workloads.hpp"

static void BM_ChainConflicts(benchmark::State& st) {
  auto inst = bench::chain_instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(optrepair::conflicts_prime_implicants(inst));
}
BENCHMARK(BM_ChainConflicts)->DenseRange(1, 5);

static void BM_FdConflicts(benchmark::State& st) {
  auto inst = bench::fd_instance(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(optrepair::conflicts_prime_implicants(inst));
}
BENCHMARK(BM_FdConflicts)->RangeMultiplier(2)->Range(1, 8);

static void BM_ChainConflictsByHittingSets(benchmark::State& st) {
  auto inst = bench::chain_instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(optrepair::conflicts_hitting_sets(inst));
}
BENCHMARK(BM_ChainConflictsByHittingSets)->DenseRange(1, 2);
