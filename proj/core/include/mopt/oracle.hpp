#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mopt/graph.hpp"

namespace mopt {

struct OracleResult {
  std::string problem;
  std::int64_t value = 0;
  std::vector<int> certificate;  // vertex set, or per-vertex labels
  double elapsed_ms = 0;
};

/// Exhaustive reference solvers, capped at 20 vertices. Intended for
/// cross-checking the decomposition-based engines on small instances.
OracleResult oracle_is(const Graph& g, const WeightMap& weights);
OracleResult oracle_vc(const Graph& g, const WeightMap& weights);
OracleResult oracle_ds(const Graph& g, const WeightMap& weights);
OracleResult oracle_maxcut(const Graph& g, const WeightMap& weights);
OracleResult oracle_chromatic(const Graph& g);

}  // namespace mopt
