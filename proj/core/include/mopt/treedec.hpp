#pragma once

#include <string>
#include <vector>

#include "mopt/graph.hpp"

namespace mopt {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;        // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;  // node-id pairs
  int host_n = 0;

  int width() const;
  int adhesion() const;
};

/// Empty result means valid; otherwise each entry names the violated
/// condition (non-tree / coverage / edge-coverage / connectivity) and a
/// witness.
std::vector<std::string> validate(const Graph& g, const TreeDecomposition& t);

enum class EliminationStrategy { min_degree, min_fill };

/// Elimination-ordering heuristic with clique fill-in; ties broken by
/// lowest vertex id.
TreeDecomposition heuristic_decompose(const Graph& g,
                                      EliminationStrategy strategy);

/// Exact treewidth by dynamic programming over elimination prefixes.
/// Hard cap n <= 18.
std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceTreeDecomposition {
  struct Node {
    NodeKind kind = NodeKind::leaf;
    int vertex = -1;               // introduce/forget only
    std::vector<int> bag;          // sorted
    std::vector<int> children;     // 0, 1 or 2 ids
  };
  std::vector<Node> nodes;
  int root = -1;
  int host_n = 0;

  int width() const;
  TreeDecomposition as_tree_decomposition() const;
};

/// Rooted normal form: Leaf / Introduce / Forget / Join nodes, empty root
/// bag, width preserved. Introduce/forget chains follow sorted vertex order.
NiceTreeDecomposition make_nice(const TreeDecomposition& t, int root = 0);

std::vector<std::string> validate_nice(const Graph& g,
                                       const NiceTreeDecomposition& t);

}  // namespace mopt
