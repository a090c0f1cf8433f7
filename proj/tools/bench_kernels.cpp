// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "circlesys/generators.hpp"
#include "circlesys/geometry.hpp"
#include "circlesys/graph.hpp"

using namespace circlesys;

namespace {

// Arg 0: 2-connected bigadget augmentation (early exit on a separating pair).
// Arg 1: 3-connected iterated medial graph with 240 vertices (full search).
const EmbeddedGraph& bench_graph(long which) {
  static const EmbeddedGraph separable = augment_octahedron(GadgetKind::Bigadget, 2);
  static const EmbeddedGraph solid = medial(medial(medial(platonic(Solid::Dodecahedron))));
  return which == 0 ? separable : solid;
}

void BM_connectivity(benchmark::State& state) {
  const EmbeddedGraph& g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connectivity_level(g));
}

void BM_connectivity_reference(benchmark::State& state) {
  const EmbeddedGraph& g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connectivity_level_reference(g));
}

void BM_lemma_sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_arc_lemma(Side::Interior, 7, state.range(0)));
}

void BM_lemma_sweep_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_arc_lemma_serial(Side::Interior, 7, state.range(0)));
}

void BM_arc_search(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gadget_arc_infeasibility(2.0, grid));
}

void BM_arc_search_reference(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gadget_arc_infeasibility_reference(2.0, grid));
}

}  // namespace

BENCHMARK(BM_connectivity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_connectivity_reference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lemma_sweep)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lemma_sweep_serial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_arc_search)->Arg(24)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_arc_search_reference)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
