#include <benchmark/benchmark.h>

#include <random>

#include "lsext/code.hpp"
#include "lsext/extension.hpp"
#include "lsext/limits.hpp"
#include "lsext/pipeline.hpp"
#include "lsext/solver.hpp"

namespace {

using namespace lsext;

// A random full-rank k x n matrix over GF(q) with no zero column.
LinearCode random_code(unsigned q, unsigned k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> sym(0, q - 1);
  const FieldSpec field(q);
  while (true) {
    std::vector<KVector> rows(k, KVector(n));
    for (auto& r : rows)
      for (auto& x : r) x = Element{static_cast<std::uint8_t>(sym(rng))};
    for (std::size_t j = 0; j < n; ++j) rows[j % k][j] = Element{1};
    if (rank(field, rows) == k) return LinearCode(GeneratorMatrix(field, std::move(rows)));
  }
}

void BM_WeightDistribution(benchmark::State& state) {
  set_worker_threads(static_cast<unsigned>(state.range(0)));
  const auto code = random_code(3, 8, 80, 1);
  for (auto _ : state) {
    // Fresh code object so the cached analysis is not reused.
    LinearCode copy(code.generator());
    benchmark::DoNotOptimize(copy.weight_distribution().total());
  }
  set_worker_threads(0);
}
BENCHMARK(BM_WeightDistribution)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IntersectionMatrix(benchmark::State& state) {
  const auto code = random_code(3, static_cast<unsigned>(state.range(0)), 40, 2);
  code.min_weight_generator();
  for (auto _ : state) benchmark::DoNotOptimize(build_intersection_matrix(code).bits.rows());
}
BENCHMARK(BM_IntersectionMatrix)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Solver(benchmark::State& state) {
  const auto strategy = static_cast<Strategy>(state.range(0));
  const auto code = random_code(3, 6, 30, 3);
  const auto sys = make_cover_system(build_intersection_matrix(code), 2, 1);
  const SolverConfig cfg{strategy, 1, 200'000'000, false};
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys, cfg).nodes_explored);
  state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_Solver)
    ->Arg(static_cast<int>(Strategy::exhaustive))
    ->Arg(static_cast<int>(Strategy::branch_and_bound))
    ->Arg(static_cast<int>(Strategy::greedy))
    ->Unit(benchmark::kMillisecond);

void BM_ExtendOnce(benchmark::State& state) {
  const auto code = random_code(2, 7, 24, 4);
  for (auto _ : state) {
    LinearCode copy(code.generator());
    benchmark::DoNotOptimize(extend_once(copy, 1, 1, ChainPolicy{}).outcome);
  }
}
BENCHMARK(BM_ExtendOnce)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
