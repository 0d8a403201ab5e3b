#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>

#include "mopt/corpus.hpp"
#include "mopt/minor.hpp"

using namespace mopt;

namespace {

bool connected_in(const Graph& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<int> stack{set.front()};
  std::set<int> in(set.begin(), set.end()), seen{set.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (in.count(u) && !seen.count(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen.size() == set.size();
}

// brute-force minor oracle for n <= 8: try every assignment of G-vertices to
// H-vertices or "unused", check connectivity and H-edge realizability
bool minor_brute(const Graph& g, const Graph& h) {
  const int n = g.num_vertices(), hn = h.num_vertices();
  REQUIRE(n <= 8);
  std::vector<int> assign(n);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= hn + 1;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::vector<std::vector<int>> sets(hn);
    for (int v = 0; v < n; ++v) {
      const int a = static_cast<int>(c % (hn + 1));
      c /= hn + 1;
      if (a < hn) sets[a].push_back(v);
    }
    bool ok = true;
    for (int i = 0; i < hn && ok; ++i)
      ok = !sets[i].empty() && connected_in(g, sets[i]);
    if (!ok) continue;
    for (auto [x, y] : h.edges()) {
      bool touch = false;
      for (int a : sets[x])
        for (int b : sets[y])
          if (g.has_edge(a, b)) touch = true;
      if (!touch) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

MinorModel singleton_model(const Graph& h) {
  MinorModel m;
  m.branch_sets.resize(h.num_vertices());
  m.tree_edges.resize(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) m.branch_sets[v] = {v};
  for (auto [u, v] : h.edges()) m.connectors[{u, v}] = {u, v};
  return m;
}

}  // namespace

TEST_CASE("singleton model of K2 in K2 verifies") {
  CHECK(verify_model(make_complete(2), make_complete(2),
                     singleton_model(make_complete(2))));
}

TEST_CASE("overlapping branch sets fail verification") {
  MinorModel m = singleton_model(make_complete(2));
  m.branch_sets[1] = {0};
  m.connectors[{0, 1}] = {0, 0};
  CHECK_FALSE(verify_model(make_complete(2), make_complete(2), m));
}

TEST_CASE("K3 sits inside K4 with singleton branch sets") {
  CHECK(verify_model(make_complete(4), make_complete(3),
                     singleton_model(make_complete(3))));
}

TEST_CASE("malformed model ids raise instead of returning false") {
  MinorModel m = singleton_model(make_complete(2));
  m.branch_sets[1] = {9};
  CHECK_THROWS(verify_model(make_complete(2), make_complete(2), m));
}

TEST_CASE("K5 contains a K4 model") {
  const auto m = find_minor_model(make_complete(5), make_complete(4));
  REQUIRE(m.has_value());
  CHECK(verify_model(make_complete(5), make_complete(4), *m));
}

TEST_CASE("the 4x4 grid has no K5 minor") {
  CHECK_FALSE(find_minor_model(make_grid(4, 4), make_complete(5)).has_value());
}

TEST_CASE("C4 has a K3 minor but not an odd one") {
  // contracting one edge of C4 yields C3, so a model exists; the partition
  // oracle below agrees
  const Graph c4 = make_cycle(4), k3 = make_complete(3);
  const auto model = find_minor_model(c4, k3);
  REQUIRE(model.has_value());
  CHECK(verify_model(c4, k3, *model));
  CHECK(minor_brute(c4, k3));
  CHECK_FALSE(verify_odd_model(c4, k3, *model).has_value());
}

TEST_CASE("caps on the exact search raise") {
  CHECK_THROWS(find_minor_model(make_grid(5, 5), make_complete(3)));
  CHECK_THROWS(find_minor_model(make_complete(7), make_complete(6)));
}

TEST_CASE("find_minor_model agrees with the partition oracle on small hosts") {
  std::vector<std::pair<std::string, Graph>> hosts{
      {"c5", make_cycle(5)},    {"c6", make_cycle(6)},
      {"k4", make_complete(4)}, {"p5", make_path(5)},
      {"grid2x3", make_grid(2, 3)},
      {"sub", make_random_subgrid(2, 4, 0.8, 5)},
      {"bip", make_random_bipartite(3, 4, 0.5, 9)}};
  std::vector<std::pair<std::string, Graph>> minors{
      {"k2", make_complete(2)},
      {"k3", make_complete(3)},
      {"k4", make_complete(4)},
      {"c4", make_cycle(4)},
      {"p3", make_path(3)}};
  for (const auto& [gn, g] : hosts)
    for (const auto& [hn, h] : minors) {
      CAPTURE(gn);
      CAPTURE(hn);
      const auto model = find_minor_model(g, h);
      CHECK(model.has_value() == minor_brute(g, h));
      if (model) CHECK(verify_model(g, h, *model));
    }
}

TEST_CASE("odd coloring of the singleton K3 model is constant") {
  const Graph k3 = make_complete(3);
  const auto col = verify_odd_model(k3, k3, singleton_model(k3));
  REQUIRE(col.has_value());
  for (auto [v, c] : col->color) CHECK(c == 0);
}

TEST_CASE("odd coloring exists for K2 modelled in P3") {
  const Graph p3 = make_path(3);
  MinorModel m;
  m.branch_sets = {{0}, {1, 2}};
  m.tree_edges = {{}, {{1, 2}}};
  m.connectors[{0, 1}] = {0, 1};
  const auto col = verify_odd_model(p3, make_complete(2), m);
  REQUIRE(col.has_value());
  CHECK(col->color.at(0) == col->color.at(1));
  CHECK(col->color.at(1) != col->color.at(2));
}

TEST_CASE("verify_odd_model rejects an invalid model") {
  MinorModel m = singleton_model(make_complete(2));
  m.branch_sets[1] = {0};
  CHECK_THROWS(verify_odd_model(make_complete(2), make_complete(2), m));
}

TEST_CASE("bipartite C4 has no odd K3 minor") {
  CHECK_FALSE(has_odd_minor(make_cycle(4), make_complete(3)));
}

TEST_CASE("K3 is its own odd K3 minor") {
  CHECK(has_odd_minor(make_complete(3), make_complete(3)));
}

TEST_CASE("C5 has an odd K3 minor") {
  CHECK(has_odd_minor(make_cycle(5), make_complete(3)));
}

TEST_CASE("odd K3 minors characterize non-bipartite corpus graphs") {
  const Graph k3 = make_complete(3);
  for (const auto& entry : corpus(1)) {
    if (entry.g.num_vertices() > 12) continue;
    CAPTURE(entry.name);
    CHECK(has_odd_minor(entry.g, k3) == !entry.bipartite);
  }
}
