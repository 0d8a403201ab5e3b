#include "mopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace mopt {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("add_edge: vertex id out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::string> Graph::audit() const {
  std::vector<std::string> bad;
  long total = 0;
  for (int u = 0; u < num_vertices(); ++u) {
    const auto& a = adj_[u];
    total += static_cast<long>(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      int v = a[i];
      if (v < 0 || v >= num_vertices())
        bad.push_back("adjacency id out of range at vertex " +
                      std::to_string(u));
      else if (v == u)
        bad.push_back("self-loop at vertex " + std::to_string(u));
      else if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
        bad.push_back("asymmetric edge " + std::to_string(u) + "-" +
                      std::to_string(v));
      if (i > 0 && a[i - 1] >= v)
        bad.push_back("adjacency not strictly sorted at vertex " +
                      std::to_string(u));
    }
  }
  if (total != 2L * m_) bad.push_back("edge count mismatch");
  return bad;
}

WeightMap WeightMap::unit_vertex(const Graph& g) {
  WeightMap w;
  w.kind = Kind::vertex;
  for (int v = 0; v < g.num_vertices(); ++v) w.vertex_values[v] = 1;
  return w;
}

WeightMap WeightMap::unit_edge(const Graph& g) {
  WeightMap w;
  w.kind = Kind::edge;
  for (auto e : g.edges()) w.edge_values[e] = 1;
  return w;
}

std::int64_t WeightMap::vertex_weight(int v) const {
  auto it = vertex_values.find(v);
  return it == vertex_values.end() ? 0 : it->second;
}

std::int64_t WeightMap::edge_weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edge_values.find({u, v});
  return it == edge_values.end() ? 0 : it->second;
}

std::int64_t WeightMap::total() const {
  std::int64_t t = 0;
  if (kind == Kind::vertex)
    for (auto& [k, w] : vertex_values) t += w;
  else
    for (auto& [k, w] : edge_values) t += w;
  return t;
}

std::vector<std::string> WeightMap::audit(const Graph& g) const {
  std::vector<std::string> bad;
  if (kind == Kind::vertex) {
    for (auto& [v, w] : vertex_values) {
      if (!g.has_vertex(v)) bad.push_back("weight on missing vertex");
      if (w < 0) bad.push_back("negative vertex weight");
    }
  } else {
    for (auto& [e, w] : edge_values) {
      if (!g.has_edge(e.first, e.second))
        bad.push_back("weight on missing edge");
      if (w < 0) bad.push_back("negative edge weight");
    }
  }
  return bad;
}

int LevelMap::max_level() const {
  int mx = -1;
  for (int l : level) mx = std::max(mx, l);
  return mx;
}

LevelMap bfs_layers(const Graph& g,
                    const std::optional<std::vector<int>>& roots) {
  const int n = g.num_vertices();
  LevelMap out;
  out.level.assign(n, -1);
  std::deque<int> queue;

  auto seed = [&](int r) {
    if (!g.has_vertex(r))
      throw std::invalid_argument("bfs_layers: root out of range");
    if (out.level[r] == -1) {
      out.level[r] = 0;
      out.roots.push_back(r);
      queue.push_back(r);
    }
  };

  auto sweep = [&] {
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (out.level[v] == -1) {
          out.level[v] = out.level[u] + 1;
          queue.push_back(v);
        }
      }
    }
  };

  if (roots) {
    for (int r : *roots) seed(r);
    sweep();
    for (int v = 0; v < n; ++v)
      if (out.level[v] == -1)
        throw std::invalid_argument("bfs_layers: vertex " + std::to_string(v) +
                                    " not reached from the given roots");
  } else {
    for (int v = 0; v < n; ++v) {
      if (out.level[v] == -1) {
        seed(v);
        sweep();
      }
    }
  }
  return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("contract_edge: uv is not an edge");
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  auto remap = [&](int x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
  Graph out(g.num_vertices() - 1);
  for (auto [a, b] : g.edges()) {
    int x = remap(a), y = remap(b);
    if (x != y) out.add_edge(x, y);
  }
  return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(
    const Graph& g, const std::vector<int>& keep) {
  std::vector<int> order = keep;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (int v : order)
    if (!g.has_vertex(v))
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  std::vector<int> inv(g.num_vertices(), -1);
  for (size_t i = 0; i < order.size(); ++i) inv[order[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(order.size()));
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbors(order[i]))
      if (inv[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), inv[w]);
  return {out, order};
}

std::variant<TwoColoring, OddCycle> two_coloring(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Monochromatic edge: walk both BFS paths up to their meeting
          // point; the two arms plus edge uv close an odd cycle.
          std::vector<int> up_u{u}, up_v{v};
          int a = u, b = v;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_v.push_back(b = parent[b]);
          }
          OddCycle witness;
          witness.cycle.assign(up_u.begin(), up_u.end());
          for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it)
            witness.cycle.push_back(*it);
          return witness;
        }
      }
    }
  }
  return TwoColoring{std::move(color)};
}

Graph make_grid(int rows, int cols) {
  Graph g(rows * cols);
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph make_cycle(int n) {
  Graph g(n);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  else if (n == 2)
    g.add_edge(0, 1);
  return g;
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

namespace {
// Seeded coin flip without std distributions, so streams are identical
// across standard library implementations.
bool coin(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  const double u =
      static_cast<double>(rng() >> 11) / 9007199254740992.0;  // 2^53
  return u < p;
}
}  // namespace

Graph make_random_subgrid(int rows, int cols, double keep_p,
                          std::uint64_t seed) {
  if (keep_p < 0.0 || keep_p > 1.0)
    throw std::invalid_argument("make_random_subgrid: p out of [0,1]");
  std::mt19937_64 rng(seed);
  Graph full = make_grid(rows, cols);
  Graph g(rows * cols);
  for (auto [u, v] : full.edges())
    if (coin(rng, keep_p)) g.add_edge(u, v);
  return g;
}

Graph make_random_bipartite(int a, int b, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("make_random_bipartite: p out of [0,1]");
  std::mt19937_64 rng(seed);
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (coin(rng, p)) g.add_edge(i, a + j);
  return g;
}

}  // namespace mopt
