#pragma once

#include <cstdint>
#include <vector>

#include "mopt/graph.hpp"
#include "mopt/treedec.hpp"

namespace mopt {

/// forced_in is required in the solution, forced_out is banned from it.
struct ForcedSets {
  std::vector<int> forced_in;
  std::vector<int> forced_out;
};

struct DpStats {
  int width = 0;
  int nodes = 0;
  long table_entries = 0;
};

struct DpSolution {
  std::int64_t value = 0;
  std::vector<int> vertex_set;   // WIS/WVC/DS certificate, sorted
  std::vector<int> assignment;   // per-vertex labels: MaxCut sides, colors
  DpStats stats;
};

/// Maximum-weight independent set. forced_in must itself be independent.
DpSolution solve_wis(const Graph& g, const WeightMap& weights,
                     const NiceTreeDecomposition& ntd,
                     const ForcedSets& forced = {});

/// Minimum-weight vertex cover. Both ends of an edge in forced_out is
/// infeasible and raises.
DpSolution solve_wvc(const Graph& g, const WeightMap& weights,
                     const NiceTreeDecomposition& ntd,
                     const ForcedSets& forced = {});

/// Minimum set dominating every vertex of `targets` (closed neighborhood).
DpSolution solve_ds(const Graph& g, const NiceTreeDecomposition& ntd,
                    const std::vector<int>& targets);

/// Maximum-weight cut; assignment holds the side of every vertex.
DpSolution solve_maxcut(const Graph& g, const WeightMap& edge_weights,
                        const NiceTreeDecomposition& ntd);

/// Chromatic number with a proper coloring as assignment.
DpSolution chromatic_number(const Graph& g,
                            const NiceTreeDecomposition& ntd);

// Certificate checkers, independent of the DP path.
bool is_independent_set(const Graph& g, const std::vector<int>& s);
bool is_vertex_cover(const Graph& g, const std::vector<int>& s);
bool dominates(const Graph& g, const std::vector<int>& s,
               const std::vector<int>& targets);
std::int64_t cut_value(const Graph& g, const WeightMap& edge_weights,
                       const std::vector<int>& sides);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);
std::int64_t set_weight(const WeightMap& weights, const std::vector<int>& s);

/// Decompose + normalize in one step (heuristic order, min-degree).
NiceTreeDecomposition nice_decomposition(const Graph& g);

}  // namespace mopt
