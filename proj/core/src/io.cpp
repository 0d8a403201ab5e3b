#include "mopt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mopt {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line) +
                           ": " + what);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1, seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (format == GraphFormat::dimacs) {
      std::string tag;
      ls >> tag;
      if (tag == "c") continue;
      if (tag == "p") {
        std::string kind;
        if (!(ls >> kind >> n >> m) || n < 0 || m < 0)
          parse_fail(lineno, "bad problem line");
        g = Graph(n);
        continue;
      }
      if (tag != "e") parse_fail(lineno, "unknown record '" + tag + "'");
      if (n < 0) parse_fail(lineno, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) parse_fail(lineno, "bad edge line");
      if (u < 1 || u > n || v < 1 || v > n || u == v)
        parse_fail(lineno, "edge endpoint out of range");
      if (g.has_edge(u - 1, v - 1)) parse_fail(lineno, "duplicate edge");
      g.add_edge(u - 1, v - 1);
      ++seen;
      continue;
    }
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "bad header");
      g = Graph(n);
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) parse_fail(lineno, "bad edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      parse_fail(lineno, "edge endpoint out of range");
    if (u >= v) parse_fail(lineno, "edges must satisfy u < v");
    if (g.has_edge(u, v)) parse_fail(lineno, "duplicate edge");
    g.add_edge(u, v);
    ++seen;
  }
  if (n < 0) parse_fail(lineno + 1, "missing header");
  if (seen != m) parse_fail(lineno + 1, "edge count does not match header");
  return g;
}

Graph parse_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in, format);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

WeightMap parse_weights(std::istream& in, const Graph& g) {
  WeightMap w;
  std::string line;
  int lineno = 0;
  bool saw_edge = false, saw_vertex = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long a, b, c;
    if (ls >> a >> b) {
      if (ls >> c) {
        saw_edge = true;
        if (!g.has_edge(static_cast<int>(a), static_cast<int>(b)) || c < 0)
          parse_fail(lineno, "bad edge weight");
        w.edge_values[{static_cast<int>(std::min(a, b)),
                       static_cast<int>(std::max(a, b))}] = c;
      } else {
        saw_vertex = true;
        if (!g.has_vertex(static_cast<int>(a)) || b < 0)
          parse_fail(lineno, "bad vertex weight");
        w.vertex_values[static_cast<int>(a)] = b;
      }
    } else {
      parse_fail(lineno, "unparseable weight line");
    }
  }
  if (saw_edge && saw_vertex)
    throw std::runtime_error("weight file mixes vertex and edge records");
  w.kind = saw_edge ? WeightMap::Kind::edge : WeightMap::Kind::vertex;
  return w;
}

nlohmann::json decomposition_to_json(const TreeDecomposition& t, int root) {
  nlohmann::json j;
  j["bags"] = t.bags;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : t.tree_edges) j["edges"].push_back({a, b});
  if (root >= 0)
    j["root"] = root;
  else
    j["root"] = nullptr;
  return j;
}

TreeDecomposition decomposition_from_json(const nlohmann::json& j) {
  TreeDecomposition t;
  t.bags = j.at("bags").get<std::vector<std::vector<int>>>();
  for (const auto& e : j.at("edges"))
    t.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  int host = -1;
  for (const auto& b : t.bags)
    for (int v : b) host = std::max(host, v);
  t.host_n = host + 1;
  for (auto& b : t.bags) std::sort(b.begin(), b.end());
  return t;
}

nlohmann::json model_to_json(const MinorModel& m, const OddColoring* coloring) {
  nlohmann::json j;
  j["branch_sets"] = m.branch_sets;
  j["tree_edges"] = nlohmann::json::array();
  for (const auto& te : m.tree_edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : te) arr.push_back({u, v});
    j["tree_edges"].push_back(arr);
  }
  j["connectors"] = nlohmann::json::object();
  for (const auto& [he, ge] : m.connectors)
    j["connectors"][std::to_string(he.first) + "-" +
                    std::to_string(he.second)] = {ge.first, ge.second};
  if (coloring) {
    j["coloring"] = nlohmann::json::object();
    for (auto [v, c] : coloring->color) j["coloring"][std::to_string(v)] = c;
  }
  return j;
}

MinorModel model_from_json(const nlohmann::json& j) {
  MinorModel m;
  m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<int>>>();
  for (const auto& te : j.at("tree_edges")) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : te)
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    m.tree_edges.push_back(std::move(edges));
  }
  for (const auto& [key, val] : j.at("connectors").items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos)
      throw std::runtime_error("model: bad connector key");
    m.connectors[{std::stoi(key.substr(0, dash)),
                  std::stoi(key.substr(dash + 1))}] = {val.at(0).get<int>(),
                                                       val.at(1).get<int>()};
  }
  return m;
}

nlohmann::json solution_to_json(const std::string& problem,
                                const DpSolution& s) {
  nlohmann::json j;
  j["problem"] = problem;
  j["value"] = s.value;
  if (!s.assignment.empty())
    j["certificate"] = s.assignment;
  else
    j["certificate"] = s.vertex_set;
  j["stats"] = {{"width", s.stats.width},
                {"nodes", s.stats.nodes},
                {"table_entries", s.stats.table_entries}};
  return j;
}

nlohmann::json pieces_to_json(const PieceDecomposition& pd) {
  nlohmann::json j;
  j["pieces"] = nlohmann::json::array();
  for (const auto& p : pd.pieces)
    j["pieces"].push_back(
        {{"vertices", p.vertices},
         {"kind", p.kind == PieceKind::bipartite ? "bip" : "tw"}});
  j["boundary"] = pd.boundary;
  return j;
}

PieceDecomposition pieces_from_json(const nlohmann::json& j) {
  PieceDecomposition pd;
  for (const auto& p : j.at("pieces")) {
    Piece piece;
    piece.vertices = p.at("vertices").get<std::vector<int>>();
    const std::string kind = p.at("kind").get<std::string>();
    if (kind == "bip")
      piece.kind = PieceKind::bipartite;
    else if (kind == "tw")
      piece.kind = PieceKind::bounded_treewidth;
    else
      throw std::runtime_error("pieces: unknown kind '" + kind + "'");
    pd.pieces.push_back(std::move(piece));
  }
  pd.boundary = j.at("boundary").get<std::vector<int>>();
  return pd;
}

}  // namespace mopt
