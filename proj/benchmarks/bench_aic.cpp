#include <benchmark/benchmark.h>

#include "optrepair/aic.hpp"
#include "optrepair/io.hpp"

using namespace optrepair;

// p_i, p_{i+1} -> {-p_i}: a ring of n atoms, all present.
static AicProblem ring(int n) {
  std::string db, rules;
  for (int i = 0; i < n; ++i) {
    auto a = "p" + std::to_string(i), b = "p" + std::to_string((i + 1) % n);
    db += a + ".\n";
    rules += a + ", " + b + " -> {-" + a + ", -" + b + "}.\n";
  }
  return AicProblem(parse_database(db), parse_aics(rules));
}

static void BM_RUpdates(benchmark::State& st) {
  auto p = ring(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(r_updates(p));
}
BENCHMARK(BM_RUpdates)->DenseRange(3, 12, 3);

static void BM_ClassifyAll(benchmark::State& st) {
  auto p = ring(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_ClassifyAll)->DenseRange(3, 9, 3);
