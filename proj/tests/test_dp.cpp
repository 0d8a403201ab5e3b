#include <doctest.h>

#include <algorithm>
#include <set>

#include "mopt/corpus.hpp"
#include "mopt/dp.hpp"
#include "mopt/oracle.hpp"

using namespace mopt;

namespace {

WeightMap weights_of(const Graph& g, std::vector<std::int64_t> vals) {
  WeightMap w;
  for (int v = 0; v < g.num_vertices(); ++v) w.vertex_values[v] = vals[v];
  return w;
}

std::vector<int> all_of(const Graph& g) {
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return all;
}

}  // namespace

TEST_CASE("wis on a single weighted vertex") {
  Graph g(1);
  const auto sol = solve_wis(g, weights_of(g, {7}), nice_decomposition(g));
  CHECK(sol.value == 7);
  CHECK(sol.vertex_set == std::vector<int>{0});
}

TEST_CASE("wis on C5 with unit weights is 2") {
  const Graph g = make_cycle(5);
  const auto sol =
      solve_wis(g, WeightMap::unit_vertex(g), nice_decomposition(g));
  CHECK(sol.value == 2);
  CHECK(is_independent_set(g, sol.vertex_set));
}

TEST_CASE("wis on P3 with a heavy center picks the center") {
  const Graph g = make_path(3);
  const auto sol = solve_wis(g, weights_of(g, {1, 5, 1}), nice_decomposition(g));
  CHECK(sol.value == 5);
  CHECK(sol.vertex_set == std::vector<int>{1});
}

TEST_CASE("wvc on K2 is 1") {
  const Graph g = make_complete(2);
  CHECK(solve_wvc(g, WeightMap::unit_vertex(g), nice_decomposition(g)).value ==
        1);
}

TEST_CASE("wvc on a star picks the center") {
  const Graph g = make_complete_bipartite(1, 4);
  const auto sol =
      solve_wvc(g, WeightMap::unit_vertex(g), nice_decomposition(g));
  CHECK(sol.value == 1);
  CHECK(sol.vertex_set == std::vector<int>{0});
}

TEST_CASE("wvc on P4 is 2") {
  const Graph g = make_path(4);
  const auto sol =
      solve_wvc(g, WeightMap::unit_vertex(g), nice_decomposition(g));
  CHECK(sol.value == 2);
  CHECK(is_vertex_cover(g, sol.vertex_set));
}

TEST_CASE("infeasible forcing raises") {
  const Graph g = make_complete(2);
  const auto ntd = nice_decomposition(g);
  CHECK_THROWS(
      solve_wis(g, WeightMap::unit_vertex(g), ntd, ForcedSets{{0, 1}, {}}));
  CHECK_THROWS(
      solve_wvc(g, WeightMap::unit_vertex(g), ntd, ForcedSets{{}, {0, 1}}));
}

TEST_CASE("ds on a star is the center") {
  const Graph g = make_complete_bipartite(1, 5);
  const auto sol = solve_ds(g, nice_decomposition(g), all_of(g));
  CHECK(sol.value == 1);
}

TEST_CASE("ds on P4 is 2") {
  const Graph g = make_path(4);
  const auto sol = solve_ds(g, nice_decomposition(g), all_of(g));
  CHECK(sol.value == 2);
  CHECK(dominates(g, sol.vertex_set, all_of(g)));
}

TEST_CASE("ds with no targets is empty") {
  const Graph g = make_cycle(6);
  CHECK(solve_ds(g, nice_decomposition(g), {}).value == 0);
}

TEST_CASE("maxcut on K23 cuts every edge") {
  const Graph g = make_complete_bipartite(2, 3);
  CHECK(solve_maxcut(g, WeightMap::unit_edge(g), nice_decomposition(g)).value ==
        6);
}

TEST_CASE("maxcut on C5 is 4") {
  const Graph g = make_cycle(5);
  const auto sol =
      solve_maxcut(g, WeightMap::unit_edge(g), nice_decomposition(g));
  CHECK(sol.value == 4);
  CHECK(cut_value(g, WeightMap::unit_edge(g), sol.assignment) == 4);
}

TEST_CASE("maxcut on one heavy edge") {
  Graph g(2);
  g.add_edge(0, 1);
  WeightMap w;
  w.kind = WeightMap::Kind::edge;
  w.edge_values[{0, 1}] = 9;
  CHECK(solve_maxcut(g, w, nice_decomposition(g)).value == 9);
}

TEST_CASE("chromatic numbers of small graphs") {
  CHECK(chromatic_number(make_cycle(6), nice_decomposition(make_cycle(6)))
            .value == 2);
  CHECK(chromatic_number(make_cycle(5), nice_decomposition(make_cycle(5)))
            .value == 3);
  const Graph k4 = make_complete(4);
  const auto sol = chromatic_number(k4, nice_decomposition(k4));
  CHECK(sol.value == 4);
  CHECK(is_proper_coloring(k4, sol.assignment));
}

TEST_CASE("certificates re-score to the reported value over the corpus") {
  for (const auto& entry : corpus(1)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > 16 || g.num_vertices() == 0) continue;
    CAPTURE(entry.name);
    const auto ntd = nice_decomposition(g);
    const WeightMap wv = WeightMap::unit_vertex(g);
    const WeightMap we = WeightMap::unit_edge(g);

    const auto wis = solve_wis(g, wv, ntd);
    CHECK(is_independent_set(g, wis.vertex_set));
    CHECK(set_weight(wv, wis.vertex_set) == wis.value);

    const auto wvc = solve_wvc(g, wv, ntd);
    CHECK(is_vertex_cover(g, wvc.vertex_set));
    CHECK(set_weight(wv, wvc.vertex_set) == wvc.value);

    const auto ds = solve_ds(g, ntd, all_of(g));
    CHECK(dominates(g, ds.vertex_set, all_of(g)));
    CHECK(static_cast<std::int64_t>(ds.vertex_set.size()) == ds.value);

    const auto mc = solve_maxcut(g, we, ntd);
    CHECK(cut_value(g, we, mc.assignment) == mc.value);

    const auto chi = chromatic_number(g, ntd);
    CHECK(is_proper_coloring(g, chi.assignment));
    std::set<int> used(chi.assignment.begin(), chi.assignment.end());
    CHECK(static_cast<std::int64_t>(used.size()) == chi.value);
  }
}

TEST_CASE("table sizes respect the per-engine base") {
  for (const auto& entry : corpus(1)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > 16 || g.num_vertices() == 0) continue;
    CAPTURE(entry.name);
    const auto ntd = nice_decomposition(g);
    const auto nodes = static_cast<std::int64_t>(ntd.nodes.size());
    const int w = ntd.width();
    auto pow_ll = [](std::int64_t b, int e) {
      std::int64_t r = 1;
      while (e-- > 0) r *= b;
      return r;
    };
    CHECK(solve_wis(g, WeightMap::unit_vertex(g), ntd).stats.table_entries <=
          nodes * pow_ll(2, w + 1));
    CHECK(solve_ds(g, ntd, all_of(g)).stats.table_entries <=
          nodes * pow_ll(3, w + 1));
    CHECK(chromatic_number(g, ntd).stats.table_entries <=
          nodes * pow_ll(w + 1, w + 1) * (w + 1));
  }
}

TEST_CASE("forcing a vertex in equals deleting its closed neighborhood") {
  for (const auto& entry : corpus(4)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > 12 || g.num_vertices() == 0) continue;
    CAPTURE(entry.name);
    const WeightMap w = WeightMap::unit_vertex(g);
    const int s = g.num_vertices() / 2;
    const auto forced =
        solve_wis(g, w, nice_decomposition(g), ForcedSets{{s}, {}});
    std::vector<int> keep;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (v != s && !g.has_edge(s, v)) keep.push_back(v);
    auto [rest, map] = induced_subgraph(g, keep);
    std::int64_t rest_val = 0;
    if (rest.num_vertices() > 0)
      rest_val = solve_wis(rest, WeightMap::unit_vertex(rest),
                           nice_decomposition(rest))
                     .value;
    CHECK(forced.value == rest_val + w.vertex_weight(s));
  }
}
