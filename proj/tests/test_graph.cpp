#include <doctest.h>

#include <set>

#include "mopt/corpus.hpp"
#include "mopt/graph.hpp"

using namespace mopt;

namespace {

// exhaustive odd-closed-walk check via simple cycle enumeration, n <= 12
bool has_odd_cycle_brute(const Graph& g) {
  const int n = g.num_vertices();
  // DFS over simple paths from each start, closing back to the start
  std::vector<char> used(n, 0);
  bool found = false;
  auto rec = [&](auto&& self, int start, int v, int len) -> void {
    if (found) return;
    for (int u : g.neighbors(v)) {
      if (u == start && len >= 3 && len % 2 == 1) {
        found = true;
        return;
      }
      if (!used[u] && u > start) {
        used[u] = 1;
        self(self, start, u, len + 1);
        used[u] = 0;
      }
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    rec(rec, s, s, 1);
  }
  return found;
}

}  // namespace

TEST_CASE("bfs layers on a path") {
  const Graph g = make_path(3);
  const LevelMap lm = bfs_layers(g);
  CHECK(lm.level == std::vector<int>{0, 1, 2});
}

TEST_CASE("bfs layers on a 5x5 grid from a corner") {
  const Graph g = make_grid(5, 5);
  const LevelMap lm = bfs_layers(g, std::vector<int>{0});
  std::vector<int> pop(lm.max_level() + 1, 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++pop[lm.level[v]];
  CHECK(pop == std::vector<int>{1, 2, 3, 4, 5, 4, 3, 2, 1});
}

TEST_CASE("bfs layers pick per-component roots") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const LevelMap lm = bfs_layers(g);
  CHECK(lm.level == std::vector<int>{0, 1, 0, 1});
  CHECK(lm.roots == std::vector<int>{0, 2});
}

TEST_CASE("bfs layers reject partial root lists") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_THROWS(bfs_layers(g, std::vector<int>{0}));
}

TEST_CASE("contracting an edge of K3 gives K2") {
  const Graph g = contract_edge(make_complete(3), 0, 1);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.audit().empty());
}

TEST_CASE("contracting an edge of C4 gives C3") {
  const Graph g = contract_edge(make_cycle(4), 0, 1);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
}

TEST_CASE("contracting K2 gives an isolated vertex") {
  const Graph g = contract_edge(make_complete(2), 0, 1);
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 0);
}

TEST_CASE("contracting a non-edge throws") {
  CHECK_THROWS(contract_edge(make_path(3), 0, 2));
}

TEST_CASE("induced subgraph of C4 on three consecutive vertices is P3") {
  auto [sub, map] = induced_subgraph(make_cycle(4), {0, 1, 2});
  CHECK(sub.num_vertices() == 3);
  CHECK(sub.num_edges() == 2);
  CHECK(map == std::vector<int>{0, 1, 2});
}

TEST_CASE("induced subgraph on the empty set is empty") {
  auto [sub, map] = induced_subgraph(make_complete(4), {});
  CHECK(sub.num_vertices() == 0);
  CHECK(map.empty());
}

TEST_CASE("induced subgraph of K4 on any three vertices is K3") {
  auto [sub, map] = induced_subgraph(make_complete(4), {0, 2, 3});
  CHECK(sub.num_vertices() == 3);
  CHECK(sub.num_edges() == 3);
}

TEST_CASE("two coloring of C4 exists") {
  CHECK(std::holds_alternative<TwoColoring>(two_coloring(make_cycle(4))));
}

TEST_CASE("two coloring of C5 yields an odd cycle witness") {
  const auto res = two_coloring(make_cycle(5));
  REQUIRE(std::holds_alternative<OddCycle>(res));
  CHECK(std::get<OddCycle>(res).cycle.size() == 5);
}

TEST_CASE("two coloring of an edgeless graph is all zero") {
  const auto res = two_coloring(Graph(3));
  REQUIRE(std::holds_alternative<TwoColoring>(res));
  CHECK(std::get<TwoColoring>(res).color == std::vector<int>{0, 0, 0});
}

TEST_CASE("generators hit known sizes") {
  const Graph g22 = make_grid(2, 2);
  CHECK(g22.num_vertices() == 4);
  CHECK(g22.num_edges() == 4);
  CHECK(make_complete_bipartite(2, 3).num_edges() == 6);
  const Graph full = make_random_subgrid(3, 3, 1.0, 7);
  CHECK(full.num_vertices() == 9);
  CHECK(full.num_edges() == 12);
}

TEST_CASE("corpus graphs satisfy the structural audit and level invariant") {
  for (const auto& entry : corpus(3)) {
    CAPTURE(entry.name);
    CHECK(entry.g.audit().empty());
    if (entry.g.num_vertices() == 0) continue;
    const LevelMap lm = bfs_layers(entry.g);
    for (auto [u, v] : entry.g.edges())
      CHECK(std::abs(lm.level[u] - lm.level[v]) <= 1);
  }
}

TEST_CASE("contraction keeps graphs simple over the corpus") {
  for (const auto& entry : corpus(2)) {
    if (entry.g.num_edges() == 0 || entry.g.num_vertices() > 14) continue;
    const auto [u, v] = entry.g.edges().front();
    const Graph c = contract_edge(entry.g, u, v);
    CAPTURE(entry.name);
    CHECK(c.num_vertices() == entry.g.num_vertices() - 1);
    CHECK(c.audit().empty());
    CHECK(c.num_edges() <= entry.g.num_edges());
  }
}

TEST_CASE("two coloring agrees with exhaustive odd cycle search") {
  for (const auto& entry : corpus(1)) {
    if (entry.g.num_vertices() > 12) continue;
    CAPTURE(entry.name);
    const bool bip = std::holds_alternative<TwoColoring>(two_coloring(entry.g));
    CHECK(bip == !has_odd_cycle_brute(entry.g));
    CHECK(bip == entry.bipartite);
  }
}
