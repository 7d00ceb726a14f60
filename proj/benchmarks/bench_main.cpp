#include <benchmark/benchmark.h>

#include "grouptest/canonical.hpp"
#include "grouptest/evaluator.hpp"
#include "grouptest/solver.hpp"
#include "grouptest/strategy.hpp"

using namespace grouptest;

namespace {

void BM_FilterFamily(benchmark::State& state) {
  const CandidateFamily family = initial_family(12, 3);
  const Pool pool{full_mask(4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(family.filtered(pool, Outcome::contaminated));
  }
}
BENCHMARK(BM_FilterFamily);

void BM_CanonicalKey(benchmark::State& state) {
  CandidateFamily family = initial_family(9, 2);
  family = family.filtered(Pool{full_mask(2)}, Outcome::pure);
  family = family.filtered(Pool{item_bit(2) | item_bit(3)}, Outcome::contaminated);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(family));
  }
}
BENCHMARK(BM_CanonicalKey);

void BM_SymmetryClasses(benchmark::State& state) {
  CandidateFamily family = initial_family(10, 2);
  family = family.filtered(Pool{full_mask(2)}, Outcome::contaminated);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetry_classes(family));
  }
}
BENCHMARK(BM_SymmetryClasses);

void BM_EvaluatePairwiseD2(benchmark::State& state) {
  const auto n = state.range(0);
  const auto strategy = make_strategy("pairwise-d2", Instance::fixed(static_cast<int>(n), 2, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(worst_case_tests(*strategy));
  }
}
BENCHMARK(BM_EvaluatePairwiseD2)->Arg(12)->Arg(20);

void BM_SolveFixed(benchmark::State& state) {
  const Instance inst =
      Instance::fixed(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                      static_cast<int>(state.range(2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst));
  }
  state.SetLabel(inst.label());
}
BENCHMARK(BM_SolveFixed)->Args({8, 1, 3})->Args({7, 2, 2})->Args({6, 2, 4})->Args({8, 2, 2})
    ->Unit(benchmark::kMillisecond);

void BM_SolveUnrestricted(benchmark::State& state) {
  const Instance inst = Instance::unrestricted(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst));
  }
  state.SetLabel(inst.label());
}
BENCHMARK(BM_SolveUnrestricted)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
