#include <benchmark/benchmark.h>

#include "optrepair/priorities.hpp"
#include "optrepair/repairs.hpp"
#include "workloads.hpp"

using namespace optrepair;

static void BM_MaximalIndependentSets(benchmark::State& st) {
  auto inst = bench::fd_instance(static_cast<int>(st.range(0)), 3);
  const auto& h = inst.hypergraph();
  for (auto _ : st) benchmark::DoNotOptimize(maximal_independent_sets(h));
  st.counters["repairs"] = static_cast<double>(maximal_independent_sets(h).size());
}
BENCHMARK(BM_MaximalIndependentSets)->DenseRange(1, 5);

// v0 beats v1 beats v2 for every key; edges only between v_i and v_{i+1}.
static PriorityRelation fd_chain_priority(int keys) {
  PriorityRelation p;
  for (int k = 0; k < keys; ++k)
    for (int v = 0; v + 1 < 3; ++v)
      p.edges.insert({pos(Fact{"R", {"k" + std::to_string(k), "v" + std::to_string(v)}}),
                      pos(Fact{"R", {"k" + std::to_string(k), "v" + std::to_string(v + 1)}})});
  return p;
}

static void BM_OptimalRepairs(benchmark::State& st) {
  int keys = static_cast<int>(st.range(0));
  auto notion = static_cast<RepairNotion>(st.range(1));
  PrioritizedDatabase pdb(bench::fd_instance(keys, 3), fd_chain_priority(keys));
  for (auto _ : st) benchmark::DoNotOptimize(optimal_repairs(pdb, notion));
}
BENCHMARK(BM_OptimalRepairs)
    ->ArgsProduct({{1, 2, 3, 4},
                   {static_cast<int>(RepairNotion::Pareto), static_cast<int>(RepairNotion::Global),
                    static_cast<int>(RepairNotion::Completion)}});
