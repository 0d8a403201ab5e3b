#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mopt/graph.hpp"

namespace mopt {

/// Branch-set model of H in G: disjoint connected sets, one per H-vertex,
/// each with a spanning tree, plus one designated connector edge per H-edge.
struct MinorModel {
  std::vector<std::vector<int>> branch_sets;
  std::vector<std::vector<std::pair<int, int>>> tree_edges;
  std::map<std::pair<int, int>, std::pair<int, int>> connectors;
};

/// 2-coloring of all model vertices: tree edges bichromatic, designated
/// connector edges monochromatic.
struct OddColoring {
  std::map<int, int> color;
};

/// True iff every model invariant holds and every H-edge has a valid
/// connector. Out-of-range ids raise instead of returning false.
bool verify_model(const Graph& g, const Graph& h, const MinorModel& m);

/// Exhaustive backtracking over branch-set assignments. Caps: |V(h)| <= 5,
/// |V(g)| <= 20. H-vertices are placed by decreasing degree, branch sets
/// grow from increasing seed ids, first model found wins.
std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h);

/// Parity-constrained coloring of a verified model: each spanning tree
/// forces its branch set's coloring up to one flip bit, connectors tie flip
/// bits together; feasibility by parity union-find.
std::optional<OddColoring> verify_odd_model(const Graph& g, const Graph& h,
                                            const MinorModel& m);

/// True iff some model of H in G (over all branch sets, spanning trees and
/// connector choices) admits an OddColoring. Same caps as find_minor_model.
bool has_odd_minor(const Graph& g, const Graph& h);

}  // namespace mopt
