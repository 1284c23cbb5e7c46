// Serial reference vs OpenMP kernels. Run with --benchmark_filter=... as usual.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "pcprod/products.hpp"
#include "pcprod/solver.hpp"

using namespace pcprod;

namespace {

// Greedy proper edge colorings are always proper connected, so the checker
// has to visit every pair.
struct CheckInput {
  Graph g;
  EdgeColoring c;
};

CheckInput torus(int a, int b) {
  auto g = build_topology("torus", {a, b}).graph;
  auto c = greedy_proper_edge_coloring(g);
  return {std::move(g), std::move(c)};
}

// A 2-coloring of the grid from the product construction: harder per pair.
CheckInput grid(int a, int b) {
  const auto p = build_topology("grid", {a, b});
  auto c = *pc_bounds(p.graph, &p).upper_coloring;
  return {p.graph, std::move(c)};
}

void BM_CheckSerial(benchmark::State &state, CheckInput (*make)(int, int)) {
  const auto in = make(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_proper_connected_serial(in.g, in.c).connected);
  state.counters["pairs"] = in.g.vertex_count() * (in.g.vertex_count() - 1) / 2;
}

void BM_CheckParallel(benchmark::State &state, CheckInput (*make)(int, int)) {
  const auto in = make(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  SearchOptions o;
  o.jobs = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(is_proper_connected_parallel(in.g, in.c, o).connected);
  state.counters["threads"] = omp_get_max_threads();
}

BENCHMARK_CAPTURE(BM_CheckSerial, torus, torus)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckParallel, torus, torus)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckSerial, grid, grid)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckParallel, grid, grid)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

// Exhaustive search: graphs whose optimum is found only after refuting k = 2.
Graph search_graph(int which) {
  switch (which) {
  case 0:
    return make_star(4);
  case 1:
    return product(make_star(3), make_path(2), ProductKind::kCartesian).graph;
  default:
    return make_petersen();
  }
}

void BM_SolveSerial(benchmark::State &state) {
  const Graph g = search_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(pc_exact_serial(g, g.edge_count()).value);
  state.counters["edges"] = g.edge_count();
}

void BM_SolveParallel(benchmark::State &state) {
  const Graph g = search_graph(static_cast<int>(state.range(0)));
  SolverOptions o;
  o.jobs = 0;
  o.check.jobs = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(pc_exact_parallel(g, g.edge_count(), o).value);
  state.counters["edges"] = g.edge_count();
}

BENCHMARK(BM_SolveSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
