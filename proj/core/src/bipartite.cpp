#include "mopt/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace mopt {

FlowNetwork::FlowNetwork(int nodes, int source, int sink)
    : n_(nodes), source_(source), sink_(sink), out_(nodes) {}

void FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("flow: negative capacity");
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity, 0, static_cast<int>(arcs_.size()) + 1});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, 0, static_cast<int>(arcs_.size()) - 1});
}

bool FlowNetwork::bfs_layers_(std::vector<int>& level) const {
  level.assign(n_, -1);
  std::deque<int> queue{source_};
  level[source_] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int id : out_[u]) {
      const Arc& a = arcs_[id];
      if (level[a.to] == -1 && a.cap - a.flow > 0) {
        level[a.to] = level[u] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level[sink_] != -1;
}

std::int64_t FlowNetwork::dfs_push_(int v, std::int64_t limit,
                                    std::vector<int>& level,
                                    std::vector<size_t>& iter) {
  if (v == sink_ || limit == 0) return limit;
  for (size_t& i = iter[v]; i < out_[v].size(); ++i) {
    Arc& a = arcs_[out_[v][i]];
    if (level[a.to] != level[v] + 1 || a.cap - a.flow <= 0) continue;
    const std::int64_t pushed =
        dfs_push_(a.to, std::min(limit, a.cap - a.flow), level, iter);
    if (pushed > 0) {
      a.flow += pushed;
      arcs_[a.rev].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow() {
  std::int64_t total = 0;
  std::vector<int> level;
  while (bfs_layers_(level)) {
    std::vector<size_t> iter(n_, 0);
    std::int64_t pushed;
    while ((pushed = dfs_push_(source_, std::numeric_limits<std::int64_t>::max(),
                               level, iter)) > 0)
      total += pushed;
  }
  // Dual audit: the residual source side must define a cut of equal value.
  source_side_.assign(n_, 0);
  std::vector<int> stack{source_};
  source_side_[source_] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int id : out_[u]) {
      const Arc& a = arcs_[id];
      if (!source_side_[a.to] && a.cap - a.flow > 0) {
        source_side_[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  std::int64_t cut = 0;
  for (int u = 0; u < n_; ++u) {
    if (!source_side_[u]) continue;
    for (int id : out_[u]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !source_side_[a.to]) cut += a.cap;
    }
  }
  if (cut != total)
    throw std::logic_error("flow: max-flow / min-cut mismatch");
  return total;
}

namespace {

// side[v]: 0 = left, 1 = right; throws unless (L,R) is a bipartition that
// every edge crosses.
std::vector<int> side_index(const Graph& g, const Bipartition& sides) {
  std::vector<int> side(g.num_vertices(), -1);
  for (int v : sides.left) {
    if (!g.has_vertex(v) || side[v] != -1)
      throw std::invalid_argument("bipartition: bad left side");
    side[v] = 0;
  }
  for (int v : sides.right) {
    if (!g.has_vertex(v) || side[v] != -1)
      throw std::invalid_argument("bipartition: bad right side");
    side[v] = 1;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (side[v] == -1)
      throw std::invalid_argument("bipartition: vertex on neither side");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v])
      throw std::invalid_argument("bipartition: edge inside one side");
  return side;
}

}  // namespace

std::vector<std::pair<int, int>> max_bipartite_matching(
    const Graph& g, const Bipartition& sides) {
  const auto side = side_index(g, sides);
  const int n = g.num_vertices();
  const int source = n, sink = n + 1;
  FlowNetwork net(n + 2, source, sink);
  std::vector<std::pair<std::pair<int, int>, int>> cross;  // edge -> arc id
  int arc_id = 0;
  for (int v = 0; v < n; ++v) {
    if (side[v] == 0) {
      net.add_arc(source, v, 1);
      arc_id += 2;
    } else {
      net.add_arc(v, sink, 1);
      arc_id += 2;
    }
  }
  for (auto [u, v] : g.edges()) {
    int l = side[u] == 0 ? u : v;
    int r = side[u] == 0 ? v : u;
    cross.push_back({{l, r}, arc_id});
    net.add_arc(l, r, 1);
    arc_id += 2;
  }
  net.max_flow();
  std::vector<std::pair<int, int>> matching;
  for (auto& [e, id] : cross)
    if (net.flow_on(id) == 1) matching.push_back(e);
  std::sort(matching.begin(), matching.end());
  return matching;
}

DpSolution bip_weighted_vc(const Graph& g, const Bipartition& sides,
                           const WeightMap& weights,
                           const ForcedSets& forced) {
  const auto side = side_index(g, sides);
  const int n = g.num_vertices();
  std::vector<char> fin(n, 0), fout(n, 0);
  for (int v : forced.forced_in) fin[v] = 1;
  for (int v : forced.forced_out) {
    if (fin[v]) throw std::invalid_argument("bip_weighted_vc: forced overlap");
    fout[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (fout[u] && fout[v])
      throw std::invalid_argument(
          "bip_weighted_vc: edge with both endpoints forced out");

  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) total += weights.vertex_weight(v);
  const std::int64_t inf = total + 1;

  const int source = n, sink = n + 1;
  FlowNetwork net(n + 2, source, sink);
  for (int v = 0; v < n; ++v) {
    const std::int64_t cap =
        fin[v] ? 0 : (fout[v] ? inf : weights.vertex_weight(v));
    if (side[v] == 0)
      net.add_arc(source, v, cap);
    else
      net.add_arc(v, sink, cap);
  }
  for (auto [u, v] : g.edges()) {
    int l = side[u] == 0 ? u : v;
    int r = side[u] == 0 ? v : u;
    net.add_arc(l, r, inf);
  }
  const std::int64_t flow = net.max_flow();
  const auto& reach = net.source_side();

  std::vector<char> in_cover(n, 0);
  for (int v = 0; v < n; ++v) {
    if (fin[v]) {
      in_cover[v] = 1;
    } else if (side[v] == 0) {
      in_cover[v] = !reach[v];
    } else {
      in_cover[v] = reach[v];
    }
  }
  DpSolution out;
  for (int v = 0; v < n; ++v)
    if (in_cover[v]) {
      if (fout[v])
        throw std::logic_error("bip_weighted_vc: forced_out vertex in cut");
      out.vertex_set.push_back(v);
      out.value += weights.vertex_weight(v);
    }
  if (!is_vertex_cover(g, out.vertex_set))
    throw std::logic_error("bip_weighted_vc: cut is not a cover");
  std::int64_t forced_weight = 0;
  for (int v = 0; v < n; ++v)
    if (fin[v]) forced_weight += weights.vertex_weight(v);
  if (out.value != flow + forced_weight)
    throw std::logic_error("bip_weighted_vc: value does not match the cut");
  return out;
}

DpSolution bip_weighted_is(const Graph& g, const Bipartition& sides,
                           const WeightMap& weights,
                           const ForcedSets& forced) {
  ForcedSets complement{forced.forced_out, forced.forced_in};
  DpSolution cover = bip_weighted_vc(g, sides, weights, complement);
  std::vector<char> covered(g.num_vertices(), 0);
  for (int v : cover.vertex_set) covered[v] = 1;
  DpSolution out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!covered[v]) {
      out.vertex_set.push_back(v);
      out.value += weights.vertex_weight(v);
    }
  return out;
}

}  // namespace mopt
