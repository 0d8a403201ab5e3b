#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mopt/baker.hpp"
#include "mopt/corpus.hpp"
#include "mopt/oracle.hpp"
#include "mopt/treedec.hpp"

using namespace mopt;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer C5
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace

TEST_CASE("t=1 yields a single class covering everything") {
  const Graph g = make_grid(3, 3);
  const auto part = baker_partition(g, 1);
  REQUIRE(part.classes.size() == 1);
  CHECK(part.classes[0].size() == 9);
}

TEST_CASE("5x5 grid from a corner with t=3 has class sizes 8,9,8") {
  const auto part =
      baker_partition(make_grid(5, 5), 3, std::vector<int>{0});
  REQUIRE(part.classes.size() == 3);
  CHECK(part.classes[0].size() == 8);
  CHECK(part.classes[1].size() == 9);
  CHECK(part.classes[2].size() == 8);
}

TEST_CASE("P4 with t=2 alternates classes along the path") {
  const auto part = baker_partition(make_path(4), 2, std::vector<int>{0});
  CHECK(part.classes[0] == std::vector<int>{0, 2});
  CHECK(part.classes[1] == std::vector<int>{1, 3});
}

TEST_CASE("non-positive t raises") {
  CHECK_THROWS(baker_partition(make_path(2), 0));
}

TEST_CASE("ptas_is on the 4x4 grid with t=4 meets its bound") {
  const Graph g = make_grid(4, 4);
  auto [sol, rep] = ptas_is(g, WeightMap::unit_vertex(g), 4, 25);
  CHECK(sol.value >= 6);  // guarantee (1 - 1/4) * 8
  CHECK(rep.guarantee == doctest::Approx(0.75));
}

TEST_CASE("ptas_is on an edgeless graph takes everything") {
  const Graph g(5);
  auto [sol, rep] = ptas_is(g, WeightMap::unit_vertex(g), 3, 25);
  CHECK(sol.value == 5);
}

TEST_CASE("ptas_is on C4 with t=2 is optimal") {
  const Graph g = make_cycle(4);
  auto [sol, rep] = ptas_is(g, WeightMap::unit_vertex(g), 2, 25);
  CHECK(sol.value == 2);
}

TEST_CASE("ptas_maxcut bounds on small graphs") {
  {
    const Graph g = make_grid(3, 3);
    auto [sol, rep] = ptas_maxcut(g, WeightMap::unit_edge(g), 4, 25);
    CHECK(sol.value >= 6);  // (1 - 2/4) * 12
  }
  {
    const Graph g = make_complete(3);
    auto [sol, rep] = ptas_maxcut(g, WeightMap::unit_edge(g), 3, 25);
    CHECK(sol.value >= 1);  // ceil((1/3) * 2)
  }
  {
    Graph g(2);
    g.add_edge(0, 1);
    auto [sol, rep] = ptas_maxcut(g, WeightMap::unit_edge(g), 3, 25);
    CHECK(sol.value >= 1);  // some shift deletes nothing
  }
}

TEST_CASE("ptas_domset specifics") {
  {
    const Graph g = make_complete_bipartite(1, 5);
    auto [sol, rep] = ptas_domset(g, 3, 25);
    CHECK(sol.value == 1);
  }
  {
    const Graph g = make_path(4);
    auto [sol, rep] = ptas_domset(g, 3, 25);
    CHECK(sol.value == 2);
  }
  {
    const Graph g(0);
    auto [sol, rep] = ptas_domset(g, 3, 25);
    CHECK(sol.value == 0);
  }
}

TEST_CASE("two_part_color on C4 sides uses 2 colors") {
  const Graph g = make_cycle(4);
  auto [colors, rep] = two_part_color(g, {0, 2}, {1, 3}, 25);
  std::set<int> used(colors.begin(), colors.end());
  CHECK(used.size() == 2);
}

TEST_CASE("two_part_color on split K4 uses 4 colors") {
  const Graph g = make_complete(4);
  auto [colors, rep] = two_part_color(g, {0, 1}, {2, 3}, 25);
  std::set<int> used(colors.begin(), colors.end());
  CHECK(used.size() == 4);
}

TEST_CASE("two_part_color on the Petersen graph stays within 6 colors") {
  const Graph g = petersen();
  auto [a, b] = decompose_two_parts(g);
  auto [colors, rep] = two_part_color(g, a, b, 25);
  std::set<int> used(colors.begin(), colors.end());
  CHECK(used.size() <= 6);  // chromatic number is 3
}

TEST_CASE("decompose_two_parts splits P4 by level parity") {
  auto [a, b] = decompose_two_parts(make_path(4));
  CHECK(a == std::vector<int>{0, 2});
  CHECK(b == std::vector<int>{1, 3});
}

TEST_CASE("decompose_two_parts of the 4x4 grid has low-width parts") {
  const Graph g = make_grid(4, 4);
  auto [a, b] = decompose_two_parts(g);
  for (const auto& part : {a, b}) {
    auto [sub, map] = induced_subgraph(g, part);
    CHECK(heuristic_decompose(sub, EliminationStrategy::min_degree).width() <=
          2);
  }
}

TEST_CASE("decompose_two_parts covers C6 by BFS parity") {
  auto [a, b] = decompose_two_parts(make_cycle(6));
  CHECK(a.size() + b.size() == 6);
  // levels from vertex 0 are 0,1,2,3,2,1
  CHECK(a.size() == 3);
  CHECK(b.size() == 3);
}

TEST_CASE("partition soundness over the corpus") {
  for (const auto& entry : corpus(1)) {
    if (entry.g.num_vertices() == 0) continue;
    for (int t = 2; t <= 4; ++t) {
      const auto part = baker_partition(entry.g, t);
      std::vector<int> seen(entry.g.num_vertices(), 0);
      for (int i = 0; i < t; ++i)
        for (int v : part.classes[i]) {
          ++seen[v];
          CHECK(part.levels.level[v] % t == i);
        }
      CHECK(std::all_of(seen.begin(), seen.end(),
                        [](int c) { return c == 1; }));
    }
  }
}

TEST_CASE("deleting one class leaves low width on grid-like graphs") {
  for (const auto& entry : corpus(1)) {
    if (entry.name.rfind("grid", 0) != 0 && entry.name.rfind("subgrid", 0) != 0)
      continue;
    const Graph& g = entry.g;
    for (int t = 2; t <= 4; ++t) {
      const auto part = baker_partition(g, t);
      for (int i = 0; i < t; ++i) {
        std::vector<int> keep;
        for (int v = 0; v < g.num_vertices(); ++v)
          if (part.levels.level[v] % t != i) keep.push_back(v);
        auto [sub, map] = induced_subgraph(g, keep);
        CAPTURE(entry.name);
        CHECK(heuristic_decompose(sub, EliminationStrategy::min_degree)
                  .width() <= 3 * t - 1);
      }
    }
  }
}
