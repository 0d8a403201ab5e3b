#include "mopt/gnc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mopt/bipartite.hpp"
#include "mopt/dp.hpp"
#include "mopt/treedec.hpp"

namespace mopt {

std::optional<KernelResult> kernel_vc_buss(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("kernel_vc_buss: k < 0");
  const int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);

  KernelResult out;
  out.k_prime = k;
  auto drop = [&](int v) {
    alive[v] = 0;
    for (int u : g.neighbors(v))
      if (alive[u]) --degree[u];
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && degree[v] > out.k_prime) {
        out.forced_in.push_back(v);
        out.rule_trace.push_back("high-degree: " + std::to_string(v));
        drop(v);
        if (--out.k_prime < 0) return std::nullopt;
        changed = true;
      }
    }
  }
  std::vector<int> keep;
  long edges = 0;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (degree[v] == 0) {
      out.rule_trace.push_back("isolated: " + std::to_string(v));
      continue;
    }
    keep.push_back(v);
    edges += degree[v];
  }
  edges /= 2;
  if (edges > static_cast<long>(out.k_prime) * out.k_prime) return std::nullopt;
  auto [sub, map] = induced_subgraph(g, keep);
  out.graph = std::move(sub);
  out.vmap = map;
  return out;
}

namespace {

// Bipartite double cover: copies v and n+v, edge uv becomes u-(n+v) and
// v-(n+u). Its minimum vertex cover is twice the half-integral LP optimum.
Graph double_cover(const Graph& g) {
  const int n = g.num_vertices();
  Graph h(2 * n);
  for (auto [u, v] : g.edges()) {
    h.add_edge(u, n + v);
    h.add_edge(v, n + u);
  }
  return h;
}

// Lexicographically smallest minimum vertex cover of a bipartite graph:
// decide vertices in ascending order with a min-cut feasibility probe each.
std::vector<int> lex_min_vertex_cover(const Graph& h,
                                      const Bipartition& sides) {
  const auto matching = max_bipartite_matching(h, sides);
  const auto target = static_cast<std::int64_t>(matching.size());
  const WeightMap unit = WeightMap::unit_vertex(h);

  ForcedSets decided;
  std::vector<int> cover;
  for (int v = 0; v < h.num_vertices(); ++v) {
    ForcedSets probe = decided;
    probe.forced_in.push_back(v);
    if (bip_weighted_vc(h, sides, unit, probe).value == target) {
      decided.forced_in.push_back(v);
      cover.push_back(v);
    } else {
      decided.forced_out.push_back(v);
    }
  }
  return cover;
}

}  // namespace

std::optional<KernelResult> kernel_vc_nt(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("kernel_vc_nt: k < 0");
  const int n = g.num_vertices();
  const Graph h = double_cover(g);
  Bipartition sides;
  for (int v = 0; v < n; ++v) sides.left.push_back(v);
  for (int v = 0; v < n; ++v) sides.right.push_back(n + v);

  const auto cover = lex_min_vertex_cover(h, sides);
  // LP value = |cover| / 2 > k, as integers: |cover| > 2k.
  if (static_cast<long>(cover.size()) > 2L * k) return std::nullopt;

  std::vector<int> x2(n, 0);  // 2 * x_v
  for (int c : cover) ++x2[c % n];

  KernelResult out;
  out.k_prime = k;
  std::vector<int> keep;
  for (int v = 0; v < n; ++v) {
    if (x2[v] == 2) {
      out.forced_in.push_back(v);
      out.rule_trace.push_back("lp-one: " + std::to_string(v));
      --out.k_prime;
    } else if (x2[v] == 0) {
      out.rule_trace.push_back("lp-zero: " + std::to_string(v));
    } else {
      keep.push_back(v);
    }
  }
  if (out.k_prime < 0) return std::nullopt;
  auto [sub, map] = induced_subgraph(g, keep);
  out.graph = std::move(sub);
  out.vmap = map;
  return out;
}

namespace {

bool branch_rec(const Graph& g, std::vector<char>& alive, int k,
                std::vector<int>& cover) {
  int eu = -1, ev = -1;
  for (int u = 0; u < g.num_vertices() && eu == -1; ++u) {
    if (!alive[u]) continue;
    for (int v : g.neighbors(u))
      if (alive[v] && v > u) {
        eu = u;
        ev = v;
        break;
      }
  }
  if (eu == -1) return true;  // edgeless
  if (k == 0) return false;
  for (int pick : {eu, ev}) {
    alive[pick] = 0;
    cover.push_back(pick);
    if (branch_rec(g, alive, k - 1, cover)) return true;
    cover.pop_back();
    alive[pick] = 1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> branch_vc(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("branch_vc: k < 0");
  std::vector<char> alive(g.num_vertices(), 1);
  std::vector<int> cover;
  if (!branch_rec(g, alive, k, cover)) return std::nullopt;
  std::sort(cover.begin(), cover.end());
  return cover;
}

GncResult gnc_solve_vc(const Graph& g, int k, const GncConfig& config) {
  if (k < 0) throw std::invalid_argument("gnc_solve_vc: k < 0");
  GncResult out;

  auto buss = kernel_vc_buss(g, k);
  if (!buss) {
    out.report.regime = "polynomial";
    out.report.method = "kernel-reject";
    return out;
  }
  auto nt = kernel_vc_nt(buss->graph, buss->k_prime);
  if (!nt) {
    out.report.regime = "polynomial";
    out.report.method = "kernel-reject";
    return out;
  }

  const Graph& kernel = nt->graph;
  const int k2 = nt->k_prime;
  out.report.kernel_vertices = kernel.num_vertices();
  out.report.predicted_exponent =
      std::sqrt(static_cast<double>(kernel.num_vertices()));

  const double threshold =
      config.beta * std::log2(std::max(1, g.num_vertices()));
  std::optional<std::vector<int>> kernel_cover;

  if (static_cast<double>(k2) <= threshold) {
    out.report.regime = "polynomial";
    out.report.method = "branch";
    kernel_cover = branch_vc(kernel, k2);
  } else {
    out.report.regime = "subexponential";
    auto td = heuristic_decompose(kernel, EliminationStrategy::min_degree);
    out.report.decomposition_width = td.width();
    if (td.width() > config.width_cap) {
      out.report.method = "branch";
      kernel_cover = branch_vc(kernel, k2);
    } else {
      out.report.method = "treewidth-dp";
      DpSolution sol = solve_wvc(kernel, WeightMap::unit_vertex(kernel),
                                 make_nice(td));
      if (sol.value <= k2) kernel_cover = sol.vertex_set;
    }
  }
  if (!kernel_cover) return out;

  // Lift through both kernelizations back to original ids.
  std::vector<int> cert = buss->forced_in;
  for (int v : nt->forced_in) cert.push_back(buss->vmap[v]);
  for (int v : *kernel_cover) cert.push_back(buss->vmap[nt->vmap[v]]);
  std::sort(cert.begin(), cert.end());

  if (static_cast<int>(cert.size()) > k)
    throw std::logic_error("gnc_solve_vc: lifted certificate exceeds k");
  if (!is_vertex_cover(g, cert))
    throw std::logic_error("gnc_solve_vc: lifted certificate is not a cover");
  out.decision = true;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace mopt
