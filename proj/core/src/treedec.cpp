#include "mopt/treedec.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mopt {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int TreeDecomposition::adhesion() const {
  int a = 0;
  std::vector<int> inter;
  for (auto [i, j] : tree_edges) {
    inter.clear();
    std::set_intersection(bags[i].begin(), bags[i].end(), bags[j].begin(),
                          bags[j].end(), std::back_inserter(inter));
    a = std::max(a, static_cast<int>(inter.size()));
  }
  return a;
}

std::vector<std::string> validate(const Graph& g, const TreeDecomposition& t) {
  std::vector<std::string> bad;
  const int k = static_cast<int>(t.bags.size());
  if (t.host_n != g.num_vertices())
    bad.push_back("non-tree: host_n does not match graph");
  if (k == 0) {
    if (g.num_vertices() > 0) bad.push_back("coverage: no bags");
    return bad;
  }

  for (auto [i, j] : t.tree_edges)
    if (i < 0 || i >= k || j < 0 || j >= k) {
      bad.push_back("non-tree: edge endpoint out of range");
      return bad;
    }
  // Tree check: connected and acyclic.
  if (static_cast<int>(t.tree_edges.size()) != k - 1) {
    bad.push_back("non-tree: node/edge count mismatch");
  } else {
    std::vector<std::vector<int>> nadj(k);
    for (auto [i, j] : t.tree_edges) {
      nadj[i].push_back(j);
      nadj[j].push_back(i);
    }
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : nadj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != k) bad.push_back("non-tree: disconnected");
  }

  for (const auto& b : t.bags)
    for (int v : b)
      if (v < 0 || v >= g.num_vertices()) {
        bad.push_back("coverage: bag vertex out of range");
        return bad;
      }

  std::vector<char> covered(g.num_vertices(), 0);
  for (const auto& b : t.bags)
    for (int v : b) covered[v] = 1;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!covered[v])
      bad.push_back("coverage: vertex " + std::to_string(v) + " in no bag");

  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& b : t.bags)
      if (std::binary_search(b.begin(), b.end(), u) &&
          std::binary_search(b.begin(), b.end(), v)) {
        found = true;
        break;
      }
    if (!found)
      bad.push_back("edge-coverage: edge " + std::to_string(u) + "-" +
                    std::to_string(v) + " in no bag");
  }

  // Connectivity: the nodes holding v must induce a connected subtree.
  std::vector<std::vector<int>> nadj(k);
  for (auto [i, j] : t.tree_edges) {
    nadj[i].push_back(j);
    nadj[j].push_back(i);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> holders;
    for (int i = 0; i < k; ++i)
      if (std::binary_search(t.bags[i].begin(), t.bags[i].end(), v))
        holders.push_back(i);
    if (holders.empty()) continue;
    std::vector<char> in(k, 0), seen(k, 0);
    for (int i : holders) in[i] = 1;
    std::vector<int> stack{holders[0]};
    seen[holders[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : nadj[u])
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != static_cast<int>(holders.size()))
      bad.push_back("connectivity: bags of vertex " + std::to_string(v) +
                    " are disconnected");
  }
  return bad;
}

namespace {

// Tree decomposition from an elimination order: bag(i) = eliminated vertex
// plus its fill-graph neighborhood at elimination time; node i hangs on the
// node of the first later-eliminated bag member.
TreeDecomposition decomposition_from_order(const Graph& g,
                                           const std::vector<int>& order) {
  const int n = g.num_vertices();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = {g.neighbors(v).begin(), g.neighbors(v).end()};
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  TreeDecomposition t;
  t.host_n = n;
  t.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> bag{v};
    for (int w : adj[v]) bag.push_back(w);
    std::sort(bag.begin(), bag.end());
    t.bags[i] = bag;
    // Clique fill-in among the remaining neighbors, then delete v.
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    for (int w : nb) adj[w].erase(v);
    adj[v].clear();
    // Attachment: earliest-eliminated later neighbor.
    int best = -1;
    for (int w : nb)
      if (best == -1 || pos[w] < pos[best]) best = w;
    if (best != -1)
      t.tree_edges.emplace_back(i, pos[best]);
    else if (i + 1 < n)
      t.tree_edges.emplace_back(i, i + 1);  // keeps the tree connected
  }
  if (n == 0) t.bags.push_back({});
  return t;
}

}  // namespace

TreeDecomposition heuristic_decompose(const Graph& g,
                                      EliminationStrategy strategy) {
  const int n = g.num_vertices();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = {g.neighbors(v).begin(), g.neighbors(v).end()};
  std::vector<char> done(n, 0);
  std::vector<int> order;
  order.reserve(n);

  auto fill_score = [&](int v) {
    long score = 0;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b)
        if (!adj[nb[a]].count(nb[b])) ++score;
    return score;
  };

  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_score = 0;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      long score = strategy == EliminationStrategy::min_degree
                       ? static_cast<long>(adj[v].size())
                       : fill_score(v);
      if (best == -1 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    done[best] = 1;
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    for (int w : nb) adj[w].erase(best);
    adj[best].clear();
  }
  return decomposition_from_order(g, order);
}

std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 18)
    throw std::invalid_argument("exact_treewidth: n > 18");
  if (n == 0) return {-1, decomposition_from_order(g, {})};

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  // q(S, v): vertices outside S u {v} reachable from v through S.
  auto q_count = [&](std::uint32_t s, int v) {
    std::uint32_t comp = 1u << v, reach = adj[v];
    std::uint32_t grow;
    while ((grow = (reach & s) & ~comp) != 0) {
      comp |= grow;
      for (std::uint32_t t = grow; t;) {
        int w = std::countr_zero(t);
        t &= t - 1;
        reach |= adj[w];
      }
    }
    return std::popcount(reach & ~s & ~(1u << v));
  };

  std::vector<int> opt(static_cast<size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = n + 1;
    for (std::uint32_t t = s; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      const std::uint32_t rest = s & ~(1u << v);
      best = std::min(best, std::max(opt[rest], q_count(rest, v)));
    }
    opt[s] = best;
  }

  // Rebuild an optimal elimination order back to front.
  std::vector<int> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int pick = -1;
    for (std::uint32_t t = s; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      const std::uint32_t rest = s & ~(1u << v);
      if (std::max(opt[rest], q_count(rest, v)) == opt[s]) {
        pick = v;
        break;
      }
    }
    order[i] = pick;
    s &= ~(1u << pick);
  }
  TreeDecomposition t = decomposition_from_order(g, order);
  return {opt[full], t};
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes)
    w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition t;
  t.host_n = host_n;
  for (const auto& nd : nodes) t.bags.push_back(nd.bag);
  for (size_t i = 0; i < nodes.size(); ++i)
    for (int c : nodes[i].children)
      t.tree_edges.emplace_back(static_cast<int>(i), c);
  return t;
}

namespace {

struct NiceBuilder {
  NiceTreeDecomposition out;

  int add(NodeKind kind, int vertex, std::vector<int> bag,
          std::vector<int> children) {
    NiceTreeDecomposition::Node nd;
    nd.kind = kind;
    nd.vertex = vertex;
    nd.bag = std::move(bag);
    nd.children = std::move(children);
    out.nodes.push_back(std::move(nd));
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // Chain from an empty leaf up to `target` via introduces.
  int chain_from_leaf(const std::vector<int>& target) {
    int cur = add(NodeKind::leaf, -1, {}, {});
    std::vector<int> bag;
    for (int v : target) {
      bag.push_back(v);
      cur = add(NodeKind::introduce, v, bag, {cur});
    }
    return cur;
  }

  // Chain from node `cur` (bag `from`) to bag `to`: forgets then introduces,
  // both in ascending vertex order.
  int bridge(int cur, std::vector<int> from, const std::vector<int>& to) {
    for (int v : from) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      std::vector<int> bag = out.nodes[cur].bag;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      cur = add(NodeKind::forget, v, bag, {cur});
    }
    for (int v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      std::vector<int> bag = out.nodes[cur].bag;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      cur = add(NodeKind::introduce, v, bag, {cur});
    }
    return cur;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& t, int root) {
  const int k = static_cast<int>(t.bags.size());
  NiceBuilder b;
  b.out.host_n = t.host_n;
  if (k == 0) {
    b.out.root = b.add(NodeKind::leaf, -1, {}, {});
    return b.out;
  }
  if (root < 0 || root >= k)
    throw std::invalid_argument("make_nice: root out of range");

  std::vector<std::vector<int>> nadj(k);
  for (auto [i, j] : t.tree_edges) {
    nadj[i].push_back(j);
    nadj[j].push_back(i);
  }

  // Iterative post-order over the rooted tree.
  std::vector<int> parent(k, -2), post;
  std::vector<int> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    post.push_back(u);
    for (int v : nadj[u])
      if (parent[v] == -2) {
        parent[v] = u;
        stack.push_back(v);
      }
  }
  std::reverse(post.begin(), post.end());

  std::vector<int> built(k, -1);  // nice node whose bag equals t.bags[i]
  for (int u : post) {
    std::vector<int> kids;
    for (int v : nadj[u])
      if (parent[v] == u) kids.push_back(v);
    if (kids.empty()) {
      built[u] = b.chain_from_leaf(t.bags[u]);
      continue;
    }
    std::vector<int> tops;
    for (int c : kids)
      tops.push_back(b.bridge(built[c], t.bags[c], t.bags[u]));
    int cur = tops[0];
    for (size_t i = 1; i < tops.size(); ++i)
      cur = b.add(NodeKind::join, -1, t.bags[u], {cur, tops[i]});
    built[u] = cur;
  }
  b.out.root = b.bridge(built[root], t.bags[root], {});
  return b.out;
}

std::vector<std::string> validate_nice(const Graph& g,
                                       const NiceTreeDecomposition& t) {
  std::vector<std::string> bad = validate(g, t.as_tree_decomposition());
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) {
    bad.push_back("nice: root out of range");
    return bad;
  }
  if (!t.nodes[t.root].bag.empty()) bad.push_back("nice: root bag not empty");
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    auto fail = [&](const char* what) {
      bad.push_back("nice: node " + std::to_string(i) + " " + what);
    };
    switch (nd.kind) {
      case NodeKind::leaf:
        if (!nd.children.empty() || !nd.bag.empty()) fail("bad leaf");
        break;
      case NodeKind::introduce: {
        if (nd.children.size() != 1) {
          fail("introduce arity");
          break;
        }
        auto expect = t.nodes[nd.children[0]].bag;
        expect.insert(
            std::lower_bound(expect.begin(), expect.end(), nd.vertex),
            nd.vertex);
        if (expect != nd.bag) fail("introduce bag relation");
        break;
      }
      case NodeKind::forget: {
        if (nd.children.size() != 1) {
          fail("forget arity");
          break;
        }
        auto expect = t.nodes[nd.children[0]].bag;
        auto it = std::find(expect.begin(), expect.end(), nd.vertex);
        if (it == expect.end()) {
          fail("forget vertex missing");
          break;
        }
        expect.erase(it);
        if (expect != nd.bag) fail("forget bag relation");
        break;
      }
      case NodeKind::join:
        if (nd.children.size() != 2 ||
            t.nodes[nd.children[0]].bag != nd.bag ||
            t.nodes[nd.children[1]].bag != nd.bag)
          fail("join bag relation");
        break;
    }
  }
  return bad;
}

}  // namespace mopt
