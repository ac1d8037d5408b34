#include "tspec/counts.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SingularCountCube(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tspec::singular_tuple_count({m, m, m}));
}
BENCHMARK(BM_SingularCountCube)->DenseRange(2, 8, 2);

void BM_SingularCountBinary(benchmark::State& state) {
  const tspec::Dims dims(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(tspec::singular_tuple_count(dims));
}
BENCHMARK(BM_SingularCountBinary)->DenseRange(4, 12, 4);

void BM_Table1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tspec::table1());
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

void BM_TwoBlock(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tspec::two_block_count(m, m, 5));
}
BENCHMARK(BM_TwoBlock)->Arg(4)->Arg(8)->Arg(16);

} // namespace
