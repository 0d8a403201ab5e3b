#include "mopt/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mopt {

namespace {

struct ParityDsu {
  std::vector<int> parent;
  std::vector<int> parity;  // parity relative to parent

  explicit ParityDsu(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }

  bool merge(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

void check_model_ids(const Graph& g, const Graph& h, const MinorModel& m) {
  if (static_cast<int>(m.branch_sets.size()) != h.num_vertices() ||
      m.tree_edges.size() != m.branch_sets.size())
    throw std::invalid_argument("model: branch set count mismatch");
  for (const auto& bs : m.branch_sets)
    for (int v : bs)
      if (!g.has_vertex(v))
        throw std::invalid_argument("model: branch set id out of range");
  for (const auto& te : m.tree_edges)
    for (auto [u, v] : te)
      if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("model: tree edge id out of range");
  for (const auto& [he, ge] : m.connectors) {
    if (!h.has_vertex(he.first) || !h.has_vertex(he.second))
      throw std::invalid_argument("model: connector H-vertex out of range");
    if (!g.has_vertex(ge.first) || !g.has_vertex(ge.second))
      throw std::invalid_argument("model: connector G-vertex out of range");
  }
}

bool spanning_tree_ok(const Graph& g, const std::vector<int>& set,
                      const std::vector<std::pair<int, int>>& tree) {
  if (tree.size() + 1 != set.size()) return false;
  std::vector<int> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  auto in_set = [&](int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  ParityDsu dsu(g.num_vertices());
  int merges = 0;
  for (auto [u, v] : tree) {
    if (!g.has_edge(u, v) || !in_set(u) || !in_set(v)) return false;
    auto [ru, pu] = dsu.find(u);
    auto [rv, pv] = dsu.find(v);
    if (ru == rv) return false;  // cycle
    dsu.merge(u, v, 1);
    ++merges;
  }
  return merges == static_cast<int>(set.size()) - 1;
}

}  // namespace

bool verify_model(const Graph& g, const Graph& h, const MinorModel& m) {
  check_model_ids(g, h, m);
  std::vector<int> owner(g.num_vertices(), -1);
  for (size_t i = 0; i < m.branch_sets.size(); ++i) {
    if (m.branch_sets[i].empty()) return false;
    for (int v : m.branch_sets[i]) {
      if (owner[v] != -1) return false;  // disjointness
      owner[v] = static_cast<int>(i);
    }
  }
  for (size_t i = 0; i < m.branch_sets.size(); ++i)
    if (!spanning_tree_ok(g, m.branch_sets[i], m.tree_edges[i])) return false;
  for (auto [u, v] : h.edges()) {
    auto it = m.connectors.find({u, v});
    if (it == m.connectors.end()) it = m.connectors.find({v, u});
    if (it == m.connectors.end()) return false;
    auto [x, y] = it->second;
    if (!g.has_edge(x, y)) return false;
    const int hu = std::min(it->first.first, it->first.second);
    const int hv = std::max(it->first.first, it->first.second);
    if (!((owner[x] == hu && owner[y] == hv) ||
          (owner[x] == hv && owner[y] == hu)))
      return false;
  }
  return true;
}

namespace {

using Mask = std::uint32_t;

struct FamilySearch {
  const Graph& g;
  const Graph& h;
  std::vector<Mask> adj;       // G adjacency masks
  std::vector<int> h_order;    // H vertices by decreasing degree
  std::vector<Mask> sets;      // branch sets by h_order position
  int n, hn;
  // Visits every assignment of disjoint connected branch sets realizing the
  // H-adjacencies; callback returns true to stop the search.
  std::function<bool(const std::vector<Mask>&)> on_family;

  FamilySearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
    n = g.num_vertices();
    hn = h.num_vertices();
    adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
    h_order.resize(hn);
    std::iota(h_order.begin(), h_order.end(), 0);
    std::stable_sort(h_order.begin(), h_order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    sets.assign(hn, 0);
  }

  Mask neighborhood(Mask s) const {
    Mask nb = 0;
    for (Mask t = s; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      nb |= adj[v];
    }
    return nb & ~s;
  }

  bool run() {
    if (hn == 0) return on_family(sets);
    return place(0, 0);
  }

  bool place(int idx, Mask used) {
    const Mask avail = (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1) & ~used;
    const int max_size = std::popcount(avail) - (hn - idx - 1);
    if (max_size <= 0) return false;
    Mask seed_banned = 0;
    for (Mask s = avail; s;) {
      const int seed = std::countr_zero(s);
      s &= s - 1;
      const Mask allowed = avail & ~seed_banned;
      if (grow(idx, used, Mask{1} << seed, adj[seed] & allowed & ~seed_banned,
               0, allowed, max_size))
        return true;
      seed_banned |= Mask{1} << seed;
    }
    return false;
  }

  // Connected-subset enumeration: extend with candidates, banning each tried
  // extension afterwards so every subset appears exactly once.
  bool grow(int idx, Mask used, Mask set, Mask cand, Mask banned, Mask allowed,
            int max_size) {
    if (accept(idx, used, set)) return true;
    if (std::popcount(set) == max_size) return false;
    for (Mask x = cand & ~banned; x;) {
      const int v = std::countr_zero(x);
      x &= x - 1;
      const Mask vb = Mask{1} << v;
      const Mask next_cand = (cand | (adj[v] & allowed)) & ~(set | vb);
      if (grow(idx, used, set | vb, next_cand, banned, allowed, max_size))
        return true;
      banned |= vb;
    }
    return false;
  }

  bool accept(int idx, Mask used, Mask set) {
    // H-adjacency to every earlier-placed branch set with an H-edge.
    const Mask nb = neighborhood(set);
    for (int j = 0; j < idx; ++j)
      if (h.has_edge(h_order[idx], h_order[j]) && !(nb & sets[j]))
        return false;
    sets[idx] = set;
    const Mask now_used = used | set;
    bool stop = false;
    if (idx + 1 == hn) {
      stop = on_family(sets);
    } else {
      // Future feasibility: every placed set with an H-edge to an unplaced
      // vertex must still touch free territory.
      const Mask free =
          (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1) & ~now_used;
      bool feasible = true;
      for (int j = 0; j <= idx && feasible; ++j) {
        bool needs_future = false;
        for (int f = idx + 1; f < hn; ++f)
          if (h.has_edge(h_order[j], h_order[f])) needs_future = true;
        if (needs_future && !(neighborhood(sets[j]) & free)) feasible = false;
      }
      if (feasible) stop = place(idx + 1, now_used);
    }
    sets[idx] = 0;
    return stop;
  }
};

std::vector<int> mask_members(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// BFS spanning tree of g restricted to `set`, restricted to edges passing
// `edge_ok`; empty result (for |set|>1) means the restriction disconnects.
std::vector<std::pair<int, int>> restricted_spanning_tree(
    const Graph& g, const std::vector<int>& set,
    const std::function<bool(int, int)>& edge_ok) {
  std::vector<std::pair<int, int>> tree;
  if (set.empty()) return tree;
  std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (int v : set) in[v] = 1;
  std::vector<int> queue{set[0]};
  seen[set[0]] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int w : g.neighbors(u))
      if (in[w] && !seen[w] && edge_ok(u, w)) {
        seen[w] = 1;
        tree.emplace_back(std::min(u, w), std::max(u, w));
        queue.push_back(w);
      }
  }
  if (queue.size() != set.size()) tree.clear();
  return tree;
}

void check_caps(const Graph& g, const Graph& h) {
  if (h.num_vertices() > 5 || g.num_vertices() > 20)
    throw std::invalid_argument("instance too large for exact minor search");
}

MinorModel model_from_family(const Graph& g, const Graph& h,
                             const std::vector<Mask>& sets,
                             const std::vector<int>& h_order) {
  MinorModel m;
  m.branch_sets.resize(h.num_vertices());
  m.tree_edges.resize(h.num_vertices());
  for (size_t i = 0; i < sets.size(); ++i)
    m.branch_sets[h_order[i]] = mask_members(sets[i]);
  for (int v = 0; v < h.num_vertices(); ++v)
    m.tree_edges[v] = restricted_spanning_tree(
        g, m.branch_sets[v], [](int, int) { return true; });
  for (auto [u, v] : h.edges()) {
    std::pair<int, int> best{-1, -1};
    for (int x : m.branch_sets[u])
      for (int y : m.branch_sets[v])
        if (g.has_edge(x, y) && (best.first == -1 || std::pair{x, y} < best))
          best = {x, y};
    m.connectors[{u, v}] = best;
  }
  return m;
}

}  // namespace

std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h) {
  check_caps(g, h);
  FamilySearch search(g, h);
  std::optional<MinorModel> found;
  search.on_family = [&](const std::vector<Mask>& sets) {
    found = model_from_family(g, h, sets, search.h_order);
    return true;
  };
  search.run();
  return found;
}

std::optional<OddColoring> verify_odd_model(const Graph& g, const Graph& h,
                                            const MinorModel& m) {
  if (!verify_model(g, h, m))
    throw std::invalid_argument("verify_odd_model: model invalid");

  // Base coloring inside each branch set: proper 2-coloring of its tree,
  // rooted at the smallest vertex.
  std::vector<int> base(g.num_vertices(), 0), set_of(g.num_vertices(), -1);
  for (size_t i = 0; i < m.branch_sets.size(); ++i) {
    for (int v : m.branch_sets[i]) set_of[v] = static_cast<int>(i);
    std::vector<std::vector<int>> tadj(g.num_vertices());
    for (auto [u, v] : m.tree_edges[i]) {
      tadj[u].push_back(v);
      tadj[v].push_back(u);
    }
    const int root = *std::min_element(m.branch_sets[i].begin(),
                                       m.branch_sets[i].end());
    std::vector<int> stack{root};
    std::vector<char> seen(g.num_vertices(), 0);
    seen[root] = 1;
    base[root] = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : tadj[u])
        if (!seen[w]) {
          seen[w] = 1;
          base[w] = 1 - base[u];
          stack.push_back(w);
        }
    }
  }

  // Connector (x,y) monochromatic: flip_i ^ flip_j = base(x) ^ base(y).
  ParityDsu dsu(static_cast<int>(m.branch_sets.size()));
  for (const auto& [he, ge] : m.connectors) {
    auto [x, y] = ge;
    if (!dsu.merge(set_of[x], set_of[y], base[x] ^ base[y])) return std::nullopt;
  }

  OddColoring out;
  for (size_t i = 0; i < m.branch_sets.size(); ++i) {
    auto [root, flip] = dsu.find(static_cast<int>(i));
    (void)root;
    for (int v : m.branch_sets[i]) out.color[v] = base[v] ^ flip;
  }
  return out;
}

bool has_odd_minor(const Graph& g, const Graph& h) {
  check_caps(g, h);
  FamilySearch search(g, h);

  search.on_family = [&](const std::vector<Mask>& sets) {
    const int hn = h.num_vertices();
    // Per branch set, the colorings whose bichromatic edges span it; any
    // such coloring is proper on some spanning tree of the set.
    std::vector<std::vector<int>> members(hn);
    std::vector<std::vector<std::uint32_t>> choices(hn);
    for (int i = 0; i < hn; ++i) {
      members[i] = mask_members(sets[i]);
      const int s = static_cast<int>(members[i].size());
      for (std::uint32_t c = 0; c < (1u << s); ++c) {
        auto color_of = [&](int v) {
          const int p = static_cast<int>(
              std::lower_bound(members[i].begin(), members[i].end(), v) -
              members[i].begin());
          return static_cast<int>((c >> p) & 1);
        };
        auto tree = restricted_spanning_tree(
            g, members[i],
            [&](int u, int w) { return color_of(u) != color_of(w); });
        if (s == 1 || !tree.empty()) choices[i].push_back(c);
      }
    }

    // Cross-set compatibility: an H-edge needs a monochromatic cross edge.
    auto compatible = [&](int i, int j, std::uint32_t ci, std::uint32_t cj) {
      for (size_t a = 0; a < members[i].size(); ++a)
        for (size_t b = 0; b < members[j].size(); ++b)
          if (g.has_edge(members[i][a], members[j][b]) &&
              ((ci >> a) & 1) == ((cj >> b) & 1))
            return true;
      return false;
    };

    std::vector<std::uint32_t> pick(hn, 0);
    std::function<bool(int)> assign = [&](int i) -> bool {
      if (i == hn) return true;
      for (std::uint32_t c : choices[i]) {
        if (i == 0 && (c & 1)) continue;  // global flip symmetry
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
          if (h.has_edge(search.h_order[i], search.h_order[j]) &&
              !compatible(i, j, c, pick[j]))
            ok = false;
        if (!ok) continue;
        pick[i] = c;
        if (assign(i + 1)) return true;
      }
      return false;
    };
    return assign(0);
  };
  return search.run();
}

}  // namespace mopt
