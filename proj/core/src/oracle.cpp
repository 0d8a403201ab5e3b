#include "mopt/oracle.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

namespace mopt {

namespace {

constexpr int kOracleCap = 20;

void check_size(const Graph& g) {
  if (g.num_vertices() > kOracleCap)
    throw std::invalid_argument("instance too large for exhaustive oracle");
}

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  return nb;
}

std::int64_t mask_weight(std::uint32_t mask, int n, const WeightMap& w) {
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) total += w.vertex_weight(v);
  return total;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

}  // namespace

OracleResult oracle_is(const Graph& g, const WeightMap& weights) {
  check_size(g);
  Timer timer;
  const int n = g.num_vertices();
  const auto nb = neighbor_masks(g);
  OracleResult best{"is", 0, {}};
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool indep = true;
    for (int v = 0; v < n && indep; ++v)
      if ((mask >> v & 1) && (nb[v] & mask)) indep = false;
    if (!indep) continue;
    const std::int64_t val = mask_weight(mask, n, weights);
    if (val > best.value) {
      best.value = val;
      best_mask = mask;
    }
  }
  best.certificate = mask_to_set(best_mask, n);
  best.elapsed_ms = timer.ms();
  return best;
}

OracleResult oracle_vc(const Graph& g, const WeightMap& weights) {
  check_size(g);
  Timer timer;
  const int n = g.num_vertices();
  const auto edges = g.edges();
  OracleResult best{"vc", std::numeric_limits<std::int64_t>::max(), {}};
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool cover = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        cover = false;
        break;
      }
    if (!cover) continue;
    const std::int64_t val = mask_weight(mask, n, weights);
    if (val < best.value) {
      best.value = val;
      best_mask = mask;
    }
  }
  best.certificate = mask_to_set(best_mask, n);
  best.elapsed_ms = timer.ms();
  return best;
}

OracleResult oracle_ds(const Graph& g, const WeightMap& weights) {
  check_size(g);
  Timer timer;
  const int n = g.num_vertices();
  auto nb = neighbor_masks(g);
  for (int v = 0; v < n; ++v) nb[v] |= 1u << v;  // closed neighborhoods
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  OracleResult best{"ds", std::numeric_limits<std::int64_t>::max(), {}};
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::uint32_t dominated = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) dominated |= nb[v];
    if (dominated != full) continue;
    const std::int64_t val = mask_weight(mask, n, weights);
    if (val < best.value) {
      best.value = val;
      best_mask = mask;
    }
  }
  best.certificate = mask_to_set(best_mask, n);
  best.elapsed_ms = timer.ms();
  return best;
}

OracleResult oracle_maxcut(const Graph& g, const WeightMap& weights) {
  check_size(g);
  Timer timer;
  const int n = g.num_vertices();
  const auto edges = g.edges();
  OracleResult best{"maxcut", 0, {}};
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = n == 0 ? 0 : 1u << (n - 1);  // fix side of v0
  for (std::uint32_t mask = 0; mask < std::max(limit, 1u); ++mask) {
    std::int64_t val = 0;
    for (auto [u, v] : edges)
      if (((mask >> u) ^ (mask >> v)) & 1) val += weights.edge_weight(u, v);
    if (val > best.value) {
      best.value = val;
      best_mask = mask;
    }
  }
  best.certificate.resize(n);
  for (int v = 0; v < n; ++v) best.certificate[v] = best_mask >> v & 1;
  best.elapsed_ms = timer.ms();
  return best;
}

OracleResult oracle_chromatic(const Graph& g) {
  check_size(g);
  Timer timer;
  const int n = g.num_vertices();
  OracleResult res{"chromatic", 0, {}};
  if (n == 0) return res;
  const auto nb = neighbor_masks(g);
  std::vector<int> color(n, -1);
  // Backtracking feasibility check for a fixed palette size q;
  // vertex 0 is pinned to color 0.
  auto feasible = [&](int q) {
    color.assign(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      const int cap = v == 0 ? 1 : q;
      for (int c = 0; c < cap; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          if ((nb[v] >> u & 1) && color[u] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (self(self, v + 1)) return true;
        color[v] = -1;
      }
      return false;
    };
    return rec(rec, 0);
  };
  for (int q = 1; q <= n; ++q) {
    if (feasible(q)) {
      res.value = q;
      res.certificate = color;
      res.elapsed_ms = timer.ms();
      return res;
    }
  }
  throw std::logic_error("chromatic oracle exhausted palette");
}

}  // namespace mopt
