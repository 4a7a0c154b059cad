#include <benchmark/benchmark.h>

#include "motif/search.hpp"

namespace {

using namespace motif;

void BM_ExhaustiveCube(benchmark::State& state) {
  const MotifSpec s = fixtures::intro_spec();
  const PointSet cube = integer_box(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_maximizer(s, cube, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExhaustiveCube)->DenseRange(1, 8);

void BM_Relocation(benchmark::State& state) {
  const MotifSpec s = fixtures::corner_spec();
  const PointSet box = integer_box(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(local_search_maximizer(s, box, 9, 1, 20));
}
BENCHMARK(BM_Relocation);

}  // namespace
