#include <benchmark/benchmark.h>

#include <vector>

#include "cutreg/cutnorm.hpp"
#include "cutreg/graph.hpp"
#include "cutreg/regularity.hpp"
#include "cutreg/rng.hpp"
#include "cutreg/spectral.hpp"

namespace {

using namespace cutreg;

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(Rng::derive({seed, 0xB0B0ull}));
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) edges.push_back({u, v, 1.0});
    }
  }
  std::vector<char> covered(n, 0);
  for (const auto& e : edges) covered[e.u] = covered[e.v] = 1;
  for (int v = 0; v < n; ++v) {
    if (!covered[v]) {
      int w = (v + 1) % n;
      edges.push_back({v < w ? v : w, v < w ? w : v, 1.0});
      covered[v] = covered[w] = 1;
    }
  }
  return Graph::from_edges(n, edges);
}

void bm_eig_sym(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Matrix m = normalized_adjacency(random_graph(n, 0.5, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_sym(m));
  }
}
BENCHMARK(bm_eig_sym)->Arg(16)->Arg(64)->Arg(128);

void bm_cutnorm_exact(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.5, 2);
  Matrix r = g.adjacency();
  double m = g.total_degree();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) r(u, v) -= g.degree(u) * g.degree(v) / m;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutnorm_exact(r, 16));
  }
}
BENCHMARK(bm_cutnorm_exact)->Arg(10)->Arg(12)->Arg(14)->Arg(16);

void bm_cutnorm_heuristic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.5, 3);
  Matrix r = g.adjacency();
  double m = g.total_degree();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) r(u, v) -= g.degree(u) * g.degree(v) / m;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutnorm_heuristic(r, 50, 0));
  }
}
BENCHMARK(bm_cutnorm_heuristic)->Arg(16)->Arg(48)->Arg(96);

void bm_decompose_exact(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.5, 4);
  DecomposeOptions opt;
  opt.epsilon = 0.6;
  opt.oracle = OracleKind::exact;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(g, opt));
  }
}
BENCHMARK(bm_decompose_exact)->Arg(8)->Arg(10)->Arg(12);

void bm_decompose_heuristic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.5, 5);
  DecomposeOptions opt;
  opt.epsilon = 0.6;
  opt.oracle = OracleKind::heuristic;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(g, opt));
  }
}
BENCHMARK(bm_decompose_heuristic)->Arg(24)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
