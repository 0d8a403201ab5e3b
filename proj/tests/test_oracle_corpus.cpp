#include <doctest.h>

#include <sstream>

#include "mopt/bench.hpp"
#include "mopt/corpus.hpp"
#include "mopt/oracle.hpp"

using namespace mopt;

TEST_CASE("oracle values on tiny graphs") {
  const Graph c5 = make_cycle(5);
  CHECK(oracle_is(c5, WeightMap::unit_vertex(c5)).value == 2);
  CHECK(oracle_chromatic(make_complete(4)).value == 4);
  const Graph k2 = make_complete(2);
  CHECK(oracle_maxcut(k2, WeightMap::unit_edge(k2)).value == 1);
}

TEST_CASE("oracles refuse graphs above 20 vertices") {
  const Graph g = make_grid(5, 5);
  CHECK_THROWS(oracle_is(g, WeightMap::unit_vertex(g)));
}

TEST_CASE("independent set and vertex cover are complementary") {
  for (const auto& entry : corpus(1)) {
    if (entry.g.num_vertices() > 16) continue;
    const WeightMap w = WeightMap::unit_vertex(entry.g);
    CAPTURE(entry.name);
    CHECK(oracle_is(entry.g, w).value + oracle_vc(entry.g, w).value ==
          entry.g.num_vertices());
  }
}

TEST_CASE("corpus(1) contains the 4x4 grid") {
  const auto entries = corpus(1);
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [](const CorpusEntry& e) {
                                 return e.name == "grid-4x4";
                               });
  REQUIRE(it != entries.end());
  CHECK(it->g.num_vertices() == 16);
  CHECK(it->g.num_edges() == 24);
}

TEST_CASE("the corpus is reproducible") {
  const auto a = corpus(1);
  const auto b = corpus(1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].g.edges() == b[i].g.edges());
    CHECK(a[i].g.num_vertices() == b[i].g.num_vertices());
  }
}

TEST_CASE("bipartite tags are honest") {
  for (const auto& entry : corpus(1)) {
    CAPTURE(entry.name);
    CHECK(entry.bipartite == is_bipartite(entry.g));
  }
}

TEST_CASE("bench CSV output is byte-identical across runs") {
  const auto r1 = bench_run(Suite::ptas, 1);
  const auto r2 = bench_run(Suite::ptas, 1);
  std::ostringstream a, b;
  write_csv(a, r1.records);
  write_csv(b, r2.records);
  CHECK(a.str() == b.str());
  CHECK(records_to_json(r1.records) == records_to_json(r2.records));
}

TEST_CASE("the dp suite holds its own assertion") {
  const auto res = bench_run(Suite::dp, 1);
  CHECK(res.pass);
  CHECK(res.records.size() >= 500);
  for (const auto& rec : res.records)
    if (rec.oracle_value) CHECK(rec.value == *rec.oracle_value);
}

TEST_CASE("the gnc suite holds its own assertion") {
  const auto res = bench_run(Suite::gnc, 2);
  CHECK(res.pass);
  CHECK(res.failures() == 0);
}

TEST_CASE("the ptas suite asserts its bounds") {
  const auto res = bench_run(Suite::ptas, 2);
  CHECK(res.pass);
  for (const auto& rec : res.records)
    if (rec.algorithm == "ptas-is" && rec.params == "t=4" && rec.oracle_value)
      CHECK(rec.value * 4 >= *rec.oracle_value * 3);
}

TEST_CASE("the hybrid suite passes") {
  CHECK(bench_run(Suite::hybrid, 3).pass);
}
