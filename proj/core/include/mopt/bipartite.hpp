#pragma once

#include <cstdint>
#include <vector>

#include "mopt/dp.hpp"
#include "mopt/graph.hpp"

namespace mopt {

/// Directed capacitated network for matching and min-cut duty.
/// Shortest-augmenting-path (BFS-layered) max flow; integer capacities.
class FlowNetwork {
 public:
  FlowNetwork(int nodes, int source, int sink);

  void add_arc(int from, int to, std::int64_t capacity);

  /// Runs max flow; also computes an independent min cut from source-side
  /// residual reachability and asserts the two values agree.
  std::int64_t max_flow();

  /// After max_flow(): nodes reachable from the source in the residual.
  const std::vector<char>& source_side() const { return source_side_; }

  std::int64_t flow_on(int arc_id) const { return arcs_[arc_id].flow; }

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t flow = 0;
    int rev;  // index of the reverse arc in arcs_of_[to]... flattened below
  };
  int n_, source_, sink_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<char> source_side_;

  bool bfs_layers_(std::vector<int>& level) const;
  std::int64_t dfs_push_(int v, std::int64_t limit, std::vector<int>& level,
                         std::vector<size_t>& iter);
};

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Maximum-cardinality matching; (L,R) must be a bipartition every edge
/// crosses. Returned edges are (u,v) with u on the left, sorted.
std::vector<std::pair<int, int>> max_bipartite_matching(const Graph& g,
                                                        const Bipartition& sides);

/// Minimum-weight vertex cover of a bipartite graph via min cut:
/// source->L and R->sink arcs carry vertex weights (0 for forced_in,
/// unbounded for forced_out), cross arcs are unbounded. forced_in vertices
/// are always part of the certificate.
DpSolution bip_weighted_vc(const Graph& g, const Bipartition& sides,
                           const WeightMap& weights,
                           const ForcedSets& forced = {});

/// Maximum-weight independent set as total weight minus the complementary
/// cover; forced sets swap roles relative to bip_weighted_vc.
DpSolution bip_weighted_is(const Graph& g, const Bipartition& sides,
                           const WeightMap& weights,
                           const ForcedSets& forced = {});

}  // namespace mopt
