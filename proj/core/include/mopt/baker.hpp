#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mopt/dp.hpp"
#include "mopt/graph.hpp"

namespace mopt {

/// BFS levels grouped by residue mod t; deleting any one class leaves a
/// union of short level ranges.
struct BakerPartition {
  int t = 1;
  LevelMap levels;
  std::vector<std::vector<int>> classes;  // class i = {v : level(v) % t == i}
};

struct ApproxReport {
  std::int64_t value = 0;
  int shift = 0;
  std::vector<int> widths;  // measured decomposition width per shift
  double guarantee = 1.0;   // declared approximation factor
};

/// Local-treewidth slope used only to pre-size width caps.
inline constexpr int kLocalTreewidthSlope = 3;

BakerPartition baker_partition(const Graph& g, int t,
                               const std::optional<std::vector<int>>& roots = {});

/// Shifted-deletion PTAS for weighted independent set, factor (1 - 1/t).
std::pair<DpSolution, ApproxReport> ptas_is(const Graph& g,
                                            const WeightMap& weights, int t,
                                            int width_cap);

/// Shifted-deletion PTAS for max cut, factor (1 - 2/t); an edge touches at
/// most two residue classes.
std::pair<DpSolution, ApproxReport> ptas_maxcut(const Graph& g,
                                                const WeightMap& edge_weights,
                                                int t, int width_cap);

/// Overlapping-slab scheme for dominating set: slabs of t+2 consecutive
/// levels sharing 2, each solved for its inner t levels, solutions joined.
/// Empirical factor 1 + 2/t; the union always dominates the whole graph.
std::pair<DpSolution, ApproxReport> ptas_domset(const Graph& g, int t,
                                                int width_cap);

/// Colors g[A] and g[B] exactly with disjoint palettes; the combination is
/// proper on all of g and uses at most twice the chromatic number.
std::pair<std::vector<int>, ApproxReport> two_part_color(
    const Graph& g, const std::vector<int>& part_a,
    const std::vector<int>& part_b, int width_cap);

/// BFS-level parity split (even levels, odd levels).
std::pair<std::vector<int>, std::vector<int>> decompose_two_parts(
    const Graph& g);

}  // namespace mopt
