#include <benchmark/benchmark.h>

#include <random>

#include "sgec/sgec.hpp"

namespace {

using namespace sgec;

// Connected G(n, p): a random spanning tree plus independent extra edges.
Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

void BM_EnumerateKarate(benchmark::State& state, const char* token) {
  Graph g = karate_club();
  Pattern f = builtin_pattern(token);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_occurrences(g, f));
}
BENCHMARK_CAPTURE(BM_EnumerateKarate, k3, "k3");
BENCHMARK_CAPTURE(BM_EnumerateKarate, p2, "p2");
BENCHMARK_CAPTURE(BM_EnumerateKarate, p3, "p3");
BENCHMARK_CAPTURE(BM_EnumerateKarate, star3, "star-3");

void BM_EnumerateRandomP2(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 8.0 / state.range(0), 1);
  Pattern f = builtin_pattern("p2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_occurrences(g, f));
}
BENCHMARK(BM_EnumerateRandomP2)->Arg(100)->Arg(400)->Arg(1600);

void BM_ApplyMixed(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 8.0 / state.range(0), 2);
  MixedTensor t = build_mixed_tensor(g, builtin_pattern("k3"));
  std::vector<double> x(g.num_vertices(), 1.0), out(g.num_vertices());
  for (auto _ : state) {
    t.apply(x, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ApplyMixed)->Arg(100)->Arg(400)->Arg(1600);

void BM_IterateKarate(benchmark::State& state) {
  Graph g = karate_club();
  SubgraphTensor p2 = build_subgraph_tensor(g, builtin_pattern("p2"));
  for (auto _ : state) benchmark::DoNotOptimize(zqw_iterate(p2));
}
BENCHMARK(BM_IterateKarate);

void BM_MixedCentrality(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 8.0 / state.range(0), 3);
  Pattern k3 = builtin_pattern("k3");
  for (auto _ : state) benchmark::DoNotOptimize(mixed_centrality(g, k3));
}
BENCHMARK(BM_MixedCentrality)->Arg(100)->Arg(400);

void BM_Betweenness(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 8.0 / state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_centrality(g));
}
BENCHMARK(BM_Betweenness)->Arg(100)->Arg(400)->Arg(1600);

void BM_SubgraphCentrality(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 8.0 / state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_centrality(g));
}
BENCHMARK(BM_SubgraphCentrality)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
