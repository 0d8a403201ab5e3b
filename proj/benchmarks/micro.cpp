#include <benchmark/benchmark.h>

#include "mopt/baker.hpp"
#include "mopt/bipartite.hpp"
#include "mopt/dp.hpp"
#include "mopt/gnc.hpp"
#include "mopt/treedec.hpp"

namespace {

void BM_HeuristicDecompose(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const mopt::Graph g = mopt::make_grid(r, r);
  for (auto _ : state) {
    auto td = mopt::heuristic_decompose(g, mopt::EliminationStrategy::min_fill);
    benchmark::DoNotOptimize(td);
  }
}
BENCHMARK(BM_HeuristicDecompose)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveWis(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const mopt::Graph g = mopt::make_grid(r, r);
  const auto w = mopt::WeightMap::unit_vertex(g);
  const auto ntd = mopt::nice_decomposition(g);
  for (auto _ : state) {
    auto sol = mopt::solve_wis(g, w, ntd);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveWis)->Arg(4)->Arg(6);

void BM_SolveDs(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const mopt::Graph g = mopt::make_grid(r, r);
  const auto ntd = mopt::nice_decomposition(g);
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  for (auto _ : state) {
    auto sol = mopt::solve_ds(g, ntd, all);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveDs)->Arg(4)->Arg(5);

void BM_BipartiteVc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const mopt::Graph g = mopt::make_random_bipartite(n, n, 0.3, 42);
  mopt::Bipartition sides;
  for (int v = 0; v < n; ++v) sides.left.push_back(v);
  for (int v = n; v < 2 * n; ++v) sides.right.push_back(v);
  const auto w = mopt::WeightMap::unit_vertex(g);
  for (auto _ : state) {
    auto sol = mopt::bip_weighted_vc(g, sides, w);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_BipartiteVc)->Arg(8)->Arg(32)->Arg(128);

void BM_GncSolve(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const mopt::Graph g = mopt::make_grid(r, r);
  const int k = r * r / 2;
  for (auto _ : state) {
    auto res = mopt::gnc_solve_vc(g, k);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_GncSolve)->Arg(4)->Arg(6);

void BM_BakerPtasIs(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const mopt::Graph g = mopt::make_grid(r, r);
  const auto w = mopt::WeightMap::unit_vertex(g);
  for (auto _ : state) {
    auto res = mopt::ptas_is(g, w, 3, 25);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BakerPtasIs)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
