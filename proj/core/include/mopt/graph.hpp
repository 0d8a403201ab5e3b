#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mopt {

/// Simple undirected graph. Vertices are dense integers 0..n-1,
/// adjacency lists are strictly sorted, no loops or parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < num_vertices(); }

  /// Adds edge uv; ignores duplicates, rejects loops and bad ids.
  void add_edge(int u, int v);

  /// Edges as (u,v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Checks every representation invariant; returns the violations found.
  std::vector<std::string> audit() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

/// Non-negative integer weights on vertices or on edges (keyed u<v).
struct WeightMap {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  std::map<int, std::int64_t> vertex_values;
  std::map<std::pair<int, int>, std::int64_t> edge_values;

  static WeightMap unit_vertex(const Graph& g);
  static WeightMap unit_edge(const Graph& g);

  std::int64_t vertex_weight(int v) const;
  std::int64_t edge_weight(int u, int v) const;
  std::int64_t total() const;

  /// Every key names an existing vertex/edge of g, all values >= 0.
  std::vector<std::string> audit(const Graph& g) const;
};

/// BFS levels: level[v] = distance to the nearest root.
struct LevelMap {
  std::vector<int> level;
  std::vector<int> roots;

  int max_level() const;
};

/// Multi-source BFS. Without explicit roots, the lowest-numbered vertex
/// of each connected component is used. Explicit roots must cover every
/// component; otherwise an error names an unreached vertex.
LevelMap bfs_layers(const Graph& g,
                    const std::optional<std::vector<int>>& roots = {});

/// Contracts edge uv: the surviving vertex is min(u,v), ids above
/// max(u,v) shift down by one, loops and duplicates are removed.
Graph contract_edge(const Graph& g, int u, int v);

/// Induced subgraph on `keep` plus the new-id -> old-id map (sorted keep).
std::pair<Graph, std::vector<int>> induced_subgraph(
    const Graph& g, const std::vector<int>& keep);

struct TwoColoring {
  std::vector<int> color;  // vertex -> {0,1}
};
struct OddCycle {
  std::vector<int> cycle;  // closed odd cycle, first vertex not repeated
};

/// Proper 2-coloring if g is bipartite, otherwise an odd-cycle witness.
std::variant<TwoColoring, OddCycle> two_coloring(const Graph& g);

inline bool is_bipartite(const Graph& g) {
  return std::holds_alternative<TwoColoring>(two_coloring(g));
}

// Generators. Grid vertices are numbered row-major; random families are
// deterministic in the seed.
Graph make_grid(int rows, int cols);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_random_subgrid(int rows, int cols, double keep_p,
                          std::uint64_t seed);
Graph make_random_bipartite(int a, int b, double p, std::uint64_t seed);

}  // namespace mopt
