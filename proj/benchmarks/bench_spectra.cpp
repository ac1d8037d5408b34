#include "tspec/approx.hpp"
#include "tspec/spectra.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SolveAll(benchmark::State& state) {
  const tspec::Dims dims{2, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1))};
  const auto t = tspec::random_tensor(dims, 1, tspec::ScalarKind::Complex);
  tspec::SolverConfig cfg;
  cfg.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(tspec::solve_all(t, cfg).found());
}
BENCHMARK(BM_SolveAll)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_NewtonPolish(benchmark::State& state) {
  const auto t = tspec::random_tensor({3, 3, 3}, 2, tspec::ScalarKind::Complex);
  const std::vector<tspec::CVector> start(3, tspec::CVector::Ones(3));
  for (auto _ : state) benchmark::DoNotOptimize(tspec::newton_polish(t, start).residual);
}
BENCHMARK(BM_NewtonPolish);

void BM_BestRankOne(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto t = tspec::random_tensor({m, m, m}, 4, tspec::ScalarKind::Real);
  for (auto _ : state) benchmark::DoNotOptimize(tspec::best_rank_one(t).sigma);
}
BENCHMARK(BM_BestRankOne)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BestRankR(benchmark::State& state) {
  const auto t = tspec::random_tensor({6, 6, 6}, 5, tspec::ScalarKind::Real);
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tspec::best_rank_r(t, {r, r, r}).error);
}
BENCHMARK(BM_BestRankR)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace
