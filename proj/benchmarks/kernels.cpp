#include <benchmark/benchmark.h>

#include <random>

#include "rademacher/constructions.hpp"
#include "rademacher/counting.hpp"
#include "rademacher/covering.hpp"
#include "rademacher/graph6.hpp"
#include "rademacher/search.hpp"

using namespace rademacher;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void BM_CountTriangles(benchmark::State& state) {
    const Graph g = build::turan_graph(state.range(0), 2).graph.without_edge(0, static_cast<Vertex>(state.range(0) - 1));
    const Graph h = build::bm_graph(state.range(0), 6, 1).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_cliques(g, 3));
        benchmark::DoNotOptimize(count_cliques(h, 3));
    }
}
BENCHMARK(BM_CountTriangles)->Arg(100)->Arg(200)->Arg(400);

void BM_CountK4Random(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 4));
}
BENCHMARK(BM_CountK4Random)->Arg(60)->Arg(120);

void BM_CountFiveCycles(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
    const Graph c5 = cycle_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(count_copies(g, c5));
}
BENCHMARK(BM_CountFiveCycles)->Arg(12)->Arg(18);

void BM_CoveringBm(benchmark::State& state) {
    const Graph g = build::bm_graph(state.range(0), 8, 1).graph;
    const Graph k3 = complete_graph(3);
    for (auto _ : state) benchmark::DoNotOptimize(cover::covering_number(g, k3).tau);
}
BENCHMARK(BM_CoveringBm)->Arg(60)->Arg(200);

void BM_CoveringRandom(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3);
    const Graph k3 = complete_graph(3);
    for (auto _ : state) benchmark::DoNotOptimize(cover::covering_number(g, k3).tau);
}
BENCHMARK(BM_CoveringRandom)->Arg(16)->Arg(24);

void BM_Graph6RoundTrip(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(from_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(64)->Arg(500);

void BM_SearchN7(benchmark::State& state) {
    oracle::SearchParams p;
    p.n = 7;
    p.e = static_cast<std::size_t>(state.range(0));
    p.s = 2;
    p.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_min_cliques(p).minimum);
}
BENCHMARK(BM_SearchN7)->Arg(13)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
