#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mopt/graph.hpp"
#include "mopt/hybrid.hpp"

namespace mopt {

struct CorpusEntry {
  std::string name;
  Graph g;
  bool planar = false;
  bool bipartite = false;
};

/// A composite instance with a known two-piece decomposition.
struct CompositeEntry {
  std::string name;
  Graph g;
  PieceDecomposition pieces;
};

/// Deterministic instance corpus: grids 2x2..6x6, random subgrids,
/// cycles C3..C10, stars, complete graphs up to K6, random bipartite.
/// Identical output for identical seeds.
std::vector<CorpusEntry> corpus(std::uint64_t seed);

/// Two-piece glued instances for the hybrid solver.
std::vector<CompositeEntry> composite_corpus(std::uint64_t seed);

}  // namespace mopt
