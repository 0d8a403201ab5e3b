#include "mopt/baker.hpp"

#include <algorithm>
#include <stdexcept>

#include "mopt/treedec.hpp"

namespace mopt {

BakerPartition baker_partition(const Graph& g, int t,
                               const std::optional<std::vector<int>>& roots) {
  if (t <= 0) throw std::invalid_argument("baker_partition: t must be >= 1");
  BakerPartition out;
  out.t = t;
  out.levels = bfs_layers(g, roots);
  out.classes.assign(t, {});
  for (int v = 0; v < g.num_vertices(); ++v)
    out.classes[out.levels.level[v] % t].push_back(v);
  return out;
}

namespace {

struct Shifted {
  Graph sub;
  std::vector<int> to_old;
  NiceTreeDecomposition ntd;
  int width = 0;
};

// g minus one residue class, decomposed; throws when the width cap is hit.
Shifted drop_class(const Graph& g, const BakerPartition& bp, int shift,
                   int width_cap) {
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (bp.levels.level[v] % bp.t != shift) keep.push_back(v);
  Shifted s;
  auto [sub, map] = induced_subgraph(g, keep);
  s.sub = std::move(sub);
  s.to_old = map;
  auto td = heuristic_decompose(s.sub, EliminationStrategy::min_degree);
  s.width = td.width();
  if (s.width > width_cap)
    throw std::invalid_argument("width cap exceeded at shift " +
                                std::to_string(shift));
  s.ntd = make_nice(td);
  return s;
}

}  // namespace

std::pair<DpSolution, ApproxReport> ptas_is(const Graph& g,
                                            const WeightMap& weights, int t,
                                            int width_cap) {
  if (t < 2) throw std::invalid_argument("ptas_is: t must be >= 2");
  const BakerPartition bp = baker_partition(g, t);
  std::optional<DpSolution> best;
  ApproxReport report;
  report.guarantee = 1.0 - 1.0 / t;
  for (int shift = 0; shift < t; ++shift) {
    Shifted s = drop_class(g, bp, shift, width_cap);
    report.widths.push_back(s.width);
    WeightMap w;
    for (int v = 0; v < s.sub.num_vertices(); ++v)
      w.vertex_values[v] = weights.vertex_weight(s.to_old[v]);
    DpSolution sol = solve_wis(s.sub, w, s.ntd);
    DpSolution mapped;
    mapped.value = sol.value;
    mapped.stats = sol.stats;
    for (int v : sol.vertex_set) mapped.vertex_set.push_back(s.to_old[v]);
    std::sort(mapped.vertex_set.begin(), mapped.vertex_set.end());
    if (!best || mapped.value > best->value) {
      best = std::move(mapped);
      report.shift = shift;
    }
  }
  report.value = best->value;
  return {*best, report};
}

std::pair<DpSolution, ApproxReport> ptas_maxcut(const Graph& g,
                                                const WeightMap& edge_weights,
                                                int t, int width_cap) {
  if (t < 3) throw std::invalid_argument("ptas_maxcut: t must be >= 3");
  const BakerPartition bp = baker_partition(g, t);
  std::optional<DpSolution> best;
  ApproxReport report;
  report.guarantee = 1.0 - 2.0 / t;
  for (int shift = 0; shift < t; ++shift) {
    Shifted s = drop_class(g, bp, shift, width_cap);
    report.widths.push_back(s.width);
    WeightMap w;
    w.kind = WeightMap::Kind::edge;
    for (auto [u, v] : s.sub.edges())
      w.edge_values[{u, v}] =
          edge_weights.edge_weight(s.to_old[u], s.to_old[v]);
    DpSolution sol = solve_maxcut(s.sub, w, s.ntd);
    // Deleted vertices land on side 0; edges they gain can only add weight,
    // so the report is re-scored on the full graph.
    DpSolution mapped;
    mapped.stats = sol.stats;
    mapped.assignment.assign(g.num_vertices(), 0);
    for (int v = 0; v < s.sub.num_vertices(); ++v)
      mapped.assignment[s.to_old[v]] = sol.assignment[v];
    mapped.value = cut_value(g, edge_weights, mapped.assignment);
    if (!best || mapped.value > best->value) {
      best = std::move(mapped);
      report.shift = shift;
    }
  }
  report.value = best->value;
  return {*best, report};
}

std::pair<DpSolution, ApproxReport> ptas_domset(const Graph& g, int t,
                                                int width_cap) {
  if (t < 3) throw std::invalid_argument("ptas_domset: t must be >= 3");
  ApproxReport report;
  report.guarantee = 1.0 + 2.0 / t;
  DpSolution empty;
  if (g.num_vertices() == 0) return {empty, report};

  const LevelMap levels = bfs_layers(g);
  const int max_level = levels.max_level();
  std::optional<DpSolution> best;

  for (int shift = 0; shift < t; ++shift) {
    int width_seen = 0;
    std::vector<char> chosen(g.num_vertices(), 0);
    // Inner ranges [shift + j*t, shift + j*t + t - 1] tile the level line;
    // each slab pads its inner range by one level on both sides.
    int j = 0;
    while (shift + j * t > 0) --j;
    long tables = 0;
    for (; shift + j * t <= max_level; ++j) {
      const int inner_lo = shift + j * t;
      const int inner_hi = inner_lo + t - 1;
      std::vector<int> slab;
      for (int v = 0; v < g.num_vertices(); ++v)
        if (levels.level[v] >= inner_lo - 1 && levels.level[v] <= inner_hi + 1)
          slab.push_back(v);
      if (slab.empty()) continue;
      auto [sub, map] = induced_subgraph(g, slab);
      std::vector<int> targets;
      for (int v = 0; v < sub.num_vertices(); ++v)
        if (levels.level[map[v]] >= inner_lo && levels.level[map[v]] <= inner_hi)
          targets.push_back(v);
      if (targets.empty()) continue;
      auto td = heuristic_decompose(sub, EliminationStrategy::min_degree);
      if (td.width() > width_cap)
        throw std::invalid_argument("width cap exceeded at shift " +
                                    std::to_string(shift));
      width_seen = std::max(width_seen, td.width());
      DpSolution sol = solve_ds(sub, make_nice(td), targets);
      tables += sol.stats.table_entries;
      for (int v : sol.vertex_set) chosen[map[v]] = 1;
    }
    report.widths.push_back(width_seen);
    DpSolution cand;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (chosen[v]) cand.vertex_set.push_back(v);
    cand.value = static_cast<std::int64_t>(cand.vertex_set.size());
    cand.stats.table_entries = tables;
    std::vector<int> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
    if (!dominates(g, cand.vertex_set, all))
      throw std::logic_error("ptas_domset: slab union fails to dominate");
    if (!best || cand.value < best->value) {
      best = std::move(cand);
      report.shift = shift;
    }
  }
  report.value = best->value;
  return {*best, report};
}

std::pair<std::vector<int>, ApproxReport> two_part_color(
    const Graph& g, const std::vector<int>& part_a,
    const std::vector<int>& part_b, int width_cap) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (int v : part_a) seen[v] = 1;
  for (int v : part_b) {
    if (seen[v]) throw std::invalid_argument("two_part_color: parts overlap");
    seen[v] = 1;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!seen[v])
      throw std::invalid_argument("two_part_color: parts do not cover V");

  ApproxReport report;
  report.guarantee = 2.0;
  std::vector<int> colors(g.num_vertices(), 0);
  int palette_base = 0;
  for (const auto* part : {&part_a, &part_b}) {
    auto [sub, map] = induced_subgraph(g, *part);
    auto td = heuristic_decompose(sub, EliminationStrategy::min_degree);
    if (td.width() > width_cap)
      throw std::invalid_argument("two_part_color: width cap exceeded");
    report.widths.push_back(td.width());
    if (sub.num_vertices() == 0) continue;
    DpSolution chi = chromatic_number(sub, make_nice(td));
    for (int v = 0; v < sub.num_vertices(); ++v)
      colors[map[v]] = palette_base + chi.assignment[v];
    palette_base += static_cast<int>(chi.value);
  }
  if (!is_proper_coloring(g, colors))
    throw std::logic_error("two_part_color: combined coloring not proper");
  report.value = palette_base;
  return {colors, report};
}

std::pair<std::vector<int>, std::vector<int>> decompose_two_parts(
    const Graph& g) {
  const LevelMap levels = bfs_layers(g);
  std::vector<int> even, odd;
  for (int v = 0; v < g.num_vertices(); ++v)
    (levels.level[v] % 2 == 0 ? even : odd).push_back(v);
  return {even, odd};
}

}  // namespace mopt
