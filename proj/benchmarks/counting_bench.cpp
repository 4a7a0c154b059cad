#include <benchmark/benchmark.h>

#include "motif/constructions.hpp"
#include "motif/counting.hpp"
#include "motif/hypergraph.hpp"
#include "motif/search.hpp"

namespace {

using namespace motif;

void BM_JoinIntroBox(benchmark::State& state) {
  const MotifSpec s = fixtures::intro_spec();
  const PointSet box = integer_box(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_motifs_join(s, box));
  state.counters["r"] = static_cast<double>(box.size());
}
BENCHMARK(BM_JoinIntroBox)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_NaiveIntroBox(benchmark::State& state) {
  const MotifSpec s = fixtures::intro_spec();
  const PointSet box = integer_box(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_motifs_naive(s, box));
  state.counters["r"] = static_cast<double>(box.size());
}
BENCHMARK(BM_NaiveIntroBox)->Arg(2)->Arg(3);

void BM_JoinCornerLines(benchmark::State& state) {
  const MotifSpec s = fixtures::corner_spec();
  const PointSet set = single_starred_construction(s, static_cast<std::size_t>(state.range(0))).set;
  for (auto _ : state) benchmark::DoNotOptimize(count_motifs_join(s, set));
}
BENCHMARK(BM_JoinCornerLines)->Arg(15)->Arg(60)->Arg(240);

void BM_FractionalMatching(benchmark::State& state) {
  const Hypergraph h = build_hypergraph(fixtures::intro_spec());
  for (auto _ : state) benchmark::DoNotOptimize(fractional_matching(h));
}
BENCHMARK(BM_FractionalMatching);

}  // namespace
