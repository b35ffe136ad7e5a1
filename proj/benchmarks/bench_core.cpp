#include <benchmark/benchmark.h>

#include "ekbounds/constants.hpp"
#include "ekbounds/optimizer.hpp"
#include "ekbounds/search.hpp"
#include "ekbounds/towers.hpp"

using namespace ekbounds;

static void BM_SieveTo(benchmark::State& state) {
  for (auto _ : state) {
    auto primes = primes_up_to(static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(primes);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SieveTo)->RangeMultiplier(10)->Range(100000, 10000000)->Complexity();

static void BM_GreedyGrh(benchmark::State& state) {
  const CoefficientFamily grh = CoefficientFamily::grh();
  const Objective gamma = Objective::gamma();
  cached_primes(100);
  for (auto _ : state) {
    auto r = greedy_bound(grh, gamma, 100);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GreedyGrh);

static void BM_GreedyUncondFull(benchmark::State& state) {
  const CoefficientFamily full = CoefficientFamily::unconditional_full();
  const Objective gamma = Objective::gamma();
  cached_primes(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto r = greedy_bound(full, gamma, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyUncondFull)->RangeMultiplier(10)->Range(10000, 1000000)->Complexity();

static void BM_LpGrh(benchmark::State& state) {
  const CoefficientFamily grh = CoefficientFamily::grh();
  const Objective gamma = Objective::gamma();
  for (auto _ : state) {
    auto r = lp_bound(grh, gamma, static_cast<std::uint64_t>(state.range(0)), 3);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LpGrh)->Arg(100)->Arg(500)->Arg(2000)->Complexity();

static void BM_EvaluateBundled(benchmark::State& state) {
  const Objective gamma = Objective::gamma();
  for (auto _ : state)
    for (const SeedRecord& record : bundled_seeds())
      benchmark::DoNotOptimize(evaluate_seed(record.seed, gamma));
}
BENCHMARK(BM_EvaluateBundled);

static void BM_SearchZykinPool(benchmark::State& state) {
  SearchSpec spec;
  spec.split_primes = {2, 3};
  spec.ramified_count = 10;
  spec.pool_limit = static_cast<std::uint64_t>(state.range(0));
  spec.sign = -1;
  spec.top_k = 5;
  cached_primes(spec.pool_limit);
  for (auto _ : state) {
    auto outcome = search_quadratic(spec);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_SearchZykinPool)->Arg(50)->Arg(60)->Arg(70);

BENCHMARK_MAIN();
