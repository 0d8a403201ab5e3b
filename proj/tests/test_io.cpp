#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "mopt/corpus.hpp"
#include "mopt/dp.hpp"
#include "mopt/io.hpp"
#include "mopt/treedec.hpp"

using namespace mopt;

TEST_CASE("edge list parsing produces P3") {
  std::istringstream in("3 2\n0 1\n1 2\n");
  const Graph g = parse_graph(in, GraphFormat::edgelist);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("duplicate edges are a parse error with a line number") {
  std::istringstream in("3 3\n0 1\n1 2\n0 1\n");
  try {
    parse_graph(in, GraphFormat::edgelist);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("the 0 0 header is the empty graph") {
  std::istringstream in("0 0\n");
  const Graph g = parse_graph(in, GraphFormat::edgelist);
  CHECK(g.num_vertices() == 0);
  CHECK(g.num_edges() == 0);
}

TEST_CASE("unsorted edge endpoints are rejected") {
  std::istringstream in("2 1\n1 0\n");
  CHECK_THROWS(parse_graph(in, GraphFormat::edgelist));
}

TEST_CASE("edge count mismatches are rejected") {
  std::istringstream in("3 2\n0 1\n");
  CHECK_THROWS(parse_graph(in, GraphFormat::edgelist));
}

TEST_CASE("dimacs parsing is 1-based and skips comments") {
  std::istringstream in("c tiny\np edge 3 2\ne 1 2\ne 2 3\n");
  const Graph g = parse_graph(in, GraphFormat::dimacs);
  CHECK(g.num_vertices() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("edge list round-trips over the corpus") {
  for (const auto& entry : corpus(1)) {
    std::ostringstream out;
    write_graph(out, entry.g);
    std::istringstream in(out.str());
    const Graph back = parse_graph(in, GraphFormat::edgelist);
    CAPTURE(entry.name);
    CHECK(back.num_vertices() == entry.g.num_vertices());
    CHECK(back.edges() == entry.g.edges());
  }
}

TEST_CASE("weight files parse both kinds") {
  const Graph g = make_path(3);
  {
    std::istringstream in("0 4\n2 6\n");
    const WeightMap w = parse_weights(in, g);
    CHECK(w.kind == WeightMap::Kind::vertex);
    CHECK(w.vertex_weight(0) == 4);
    CHECK(w.vertex_weight(2) == 6);
  }
  {
    std::istringstream in("0 1 4\n1 2 6\n");
    const WeightMap w = parse_weights(in, g);
    CHECK(w.kind == WeightMap::Kind::edge);
    CHECK(w.edge_weight(0, 1) == 4);
  }
  {
    std::istringstream in("0 4\n1 2 6\n");
    CHECK_THROWS(parse_weights(in, g));
  }
}

TEST_CASE("decomposition JSON round-trips") {
  const Graph g = make_cycle(5);
  const auto td = heuristic_decompose(g, EliminationStrategy::min_degree);
  const nlohmann::json j = decomposition_to_json(td, 0);
  CHECK(j.at("root") == 0);
  const TreeDecomposition back = decomposition_from_json(j);
  CHECK(back.bags == td.bags);
  CHECK(back.tree_edges == td.tree_edges);
  CHECK(validate(g, back).empty());
}

TEST_CASE("model JSON round-trips") {
  MinorModel m;
  m.branch_sets = {{0}, {1, 2}};
  m.tree_edges = {{}, {{1, 2}}};
  m.connectors[{0, 1}] = {0, 1};
  const nlohmann::json j = model_to_json(m);
  CHECK(j.at("connectors").contains("0-1"));
  const MinorModel back = model_from_json(j);
  CHECK(back.branch_sets == m.branch_sets);
  CHECK(back.tree_edges == m.tree_edges);
  CHECK(back.connectors == m.connectors);
}

TEST_CASE("solution JSON carries value, certificate and stats") {
  const Graph g = make_cycle(4);
  const auto sol =
      solve_wis(g, WeightMap::unit_vertex(g), nice_decomposition(g));
  const nlohmann::json j = solution_to_json("is", sol);
  CHECK(j.at("problem") == "is");
  CHECK(j.at("value") == 2);
  CHECK(j.at("stats").contains("width"));
  CHECK(j.at("stats").contains("table_entries"));
}

TEST_CASE("pieces JSON round-trips") {
  PieceDecomposition pd;
  pd.pieces.push_back({{0, 1, 2}, PieceKind::bounded_treewidth});
  pd.pieces.push_back({{0, 3, 4}, PieceKind::bipartite});
  pd.boundary = {0};
  const nlohmann::json j = pieces_to_json(pd);
  CHECK(j.at("pieces")[0].at("kind") == "tw");
  CHECK(j.at("pieces")[1].at("kind") == "bip");
  const PieceDecomposition back = pieces_from_json(j);
  CHECK(back.boundary == pd.boundary);
  CHECK(back.pieces.size() == 2);
  CHECK(back.pieces[1].kind == PieceKind::bipartite);
  CHECK(back.pieces[0].vertices == pd.pieces[0].vertices);
}
