#pragma once

#include <string>
#include <vector>

#include "mopt/bipartite.hpp"
#include "mopt/dp.hpp"
#include "mopt/graph.hpp"

namespace mopt {

enum class PieceKind { bounded_treewidth, bipartite };

struct Piece {
  std::vector<int> vertices;
  PieceKind kind = PieceKind::bounded_treewidth;
};

/// Mixed decomposition: pieces cover the graph edge-by-edge, shared
/// vertices (plus any designated interface vertices) form the boundary.
/// A bipartite piece must be bipartite once the boundary is removed.
struct PieceDecomposition {
  std::vector<Piece> pieces;
  std::vector<int> boundary;
};

std::vector<std::string> validate_pieces(const Graph& g,
                                         const PieceDecomposition& pd);

enum class HybridProblem { vertex_cover, independent_set };

/// Exact solver over a piece decomposition: enumerates the 2^|boundary|
/// in/out assignments, conditions each piece on its share of the boundary
/// (treewidth pieces via DP, bipartite pieces via min-cut) and combines
/// additively. Boundary weights count exactly once. |boundary| <= 20.
DpSolution hybrid_solve(const Graph& g, const PieceDecomposition& pd,
                        HybridProblem problem, const WeightMap& weights,
                        int width_cap = 25);

}  // namespace mopt
