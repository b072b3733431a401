#include <benchmark/benchmark.h>

#include "uniq01/decider.hpp"
#include "uniq01/generate.hpp"

using namespace uniq01;

namespace {

void BM_DecideKnapsackOracle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Objective obj{MaximizeKnapsackProfit{gen_knapsack(n, 50, 1234)}};
  for (auto _ : state) {
    EnumerationOracle oracle;
    UniquenessReport report = decide_unique(obj, oracle);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_DecideKnapsackOracle)->DenseRange(8, 20, 4);

void BM_DecideKnapsackBrute(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Objective obj{MaximizeKnapsackProfit{gen_knapsack(n, 50, 1234)}};
  for (auto _ : state) {
    UniquenessReport report = brute_force_unique(obj);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_DecideKnapsackBrute)->DenseRange(8, 16, 4);

void BM_HyperbolicSearch(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  HyperbolicProgram prog = gen_hyperbolic(n, 50, 77);
  for (auto _ : state) {
    EnumerationOracle oracle;
    RationalSearchOutcome out = solve_max_hyperbolic(prog, oracle);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_HyperbolicSearch)->DenseRange(8, 16, 4);

// one threshold query that has to walk the whole cube
void BM_OracleFullScan(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Objective obj{MinimizeQuadratic{gen_quadratic(n, 50, 9)}};
  Int below_min = -magnitude_bound(obj) - 1;
  for (auto _ : state) {
    EnumerationOracle oracle;
    auto witness = oracle.exists_at_most(obj, below_min);
    benchmark::DoNotOptimize(witness);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_OracleFullScan)->DenseRange(10, 20, 5);

void BM_SimplestRational(benchmark::State& state) {
  Rat target = make_rat(Int("3141592653589793"), Int("1000000000000000"));
  Rat eps = make_rat(1, Int("5000000000000000000000000000000"));
  for (auto _ : state) {
    Rat r = simplest_rational_in(target - eps, target + eps);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SimplestRational);

}  // namespace

BENCHMARK_MAIN();
