#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mopt/graph.hpp"

namespace mopt {

/// Reduced instance plus the bookkeeping to lift answers back: forced
/// vertices are in original ids, vmap maps reduced ids to original ids.
/// The reduced graph is an induced subgraph of the input, so the
/// reduction is minor-monotone.
struct KernelResult {
  Graph graph;
  int k_prime = 0;
  std::vector<int> forced_in;
  std::vector<int> vmap;
  std::vector<std::string> rule_trace;
};

/// Buss rules: vertices of degree > k' are forced into the cover, isolated
/// vertices are dropped; more than k'^2 remaining edges is a no-instance
/// (nullopt).
std::optional<KernelResult> kernel_vc_buss(const Graph& g, int k);

/// Nemhauser-Trotter LP kernel via the bipartite double cover: the
/// half-integral LP optimum comes from a minimum vertex cover of the cover
/// graph (the lexicographically smallest one, for determinism); x=1
/// vertices are forced, x=0 deleted, the x=1/2 kernel has at most 2k'
/// vertices. LP value above k is a no-instance (nullopt).
std::optional<KernelResult> kernel_vc_nt(const Graph& g, int k);

/// Exact bounded search tree: branch on an endpoint of the first edge.
std::optional<std::vector<int>> branch_vc(const Graph& g, int k);

struct GncConfig {
  double beta = 1.0;
  int width_cap = 25;
};

struct GncReport {
  std::string regime;       // "polynomial" | "subexponential"
  int kernel_vertices = 0;
  int decomposition_width = -1;
  std::string method;       // "branch" | "treewidth-dp"
  double predicted_exponent = 0.0;  // sqrt(kernel_vertices), informational
};

struct GncResult {
  bool decision = false;
  std::optional<std::vector<int>> certificate;
  GncReport report;
};

/// Guess-and-conquer pipeline: Buss then NT kernelization, then either a
/// bounded search tree (k' small against beta*log2 n) or treewidth DP on
/// the kernel; falls back to branching past the width cap. Exact decision.
GncResult gnc_solve_vc(const Graph& g, int k, const GncConfig& config = {});

}  // namespace mopt
