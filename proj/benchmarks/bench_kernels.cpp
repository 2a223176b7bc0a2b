// Microbenchmarks for the hot kernels: cycle search, VC dimension, packing
// refinement, maximality, the weighted-code search, and the decomposition
// pipeline end to end. Sizes are chosen so a full run stays under a minute.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "threshold_lab/codes.hpp"
#include "threshold_lab/constructions.hpp"
#include "threshold_lab/decompose.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/partition.hpp"
#include "threshold_lab/rational.hpp"
#include "threshold_lab/saturation.hpp"
#include "threshold_lab/search.hpp"
#include "threshold_lab/vc.hpp"

namespace {

using namespace tlab;

Graph uniform_blowup(const Graph& g, int copies) {
  return blowup(g, std::vector<int>(g.vertex_count(), copies)).graph;
}

Graph random_half_graph(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

void bm_find_cycle_absent(benchmark::State& state) {
  const Graph g = uniform_blowup(andrasfai(3, 3).graph, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_cycle_of_length(g, 5));
  }
  state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(bm_find_cycle_absent)->Arg(1)->Arg(2)->Arg(4);

void bm_vc_dimension_circulant(benchmark::State& state) {
  const Graph g = andrasfai(3, static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vc_dimension(g));
  }
  state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(bm_vc_dimension_circulant)->Arg(3)->Arg(6)->Arg(12);

void bm_packing_partition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_half_graph(n, 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(packing_partition(g, n / 8));
  }
}
BENCHMARK(bm_packing_partition)->Arg(64)->Arg(128)->Arg(256);

void bm_partition_sequence(benchmark::State& state) {
  const Graph g = uniform_blowup(andrasfai(3, 3).graph, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_sequence(g, Rational(1, 360), 3));
  }
  state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(bm_partition_sequence)->Arg(2)->Arg(4)->Arg(8);

void bm_maximality(benchmark::State& state) {
  const Graph g = uniform_blowup(andrasfai(3, 4).graph, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_maximal_free(g, 5));
  }
  state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(bm_maximality)->Arg(1)->Arg(2)->Arg(3);

void bm_code_search(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  const Graph g = Graph::from_edges(n, edges);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_max_weight(g, 3, 3, 50'000'000));
  }
}
BENCHMARK(bm_code_search)->Arg(5)->Arg(9)->Arg(13);

void bm_decompose_pipeline(benchmark::State& state) {
  const Graph g = uniform_blowup(andrasfai(3, 3).graph, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_blowup(g, 3, Rational(1, 20)));
  }
  state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(bm_decompose_pipeline)->Arg(2)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
