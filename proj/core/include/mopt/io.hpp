#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mopt/baker.hpp"
#include "mopt/dp.hpp"
#include "mopt/graph.hpp"
#include "mopt/hybrid.hpp"
#include "mopt/minor.hpp"
#include "mopt/treedec.hpp"

namespace mopt {

enum class GraphFormat { edgelist, dimacs };

/// Edge-list text: header "n m", then one "u v" line per edge with
/// 0 <= u < v < n. DIMACS: "p edge n m" header, 1-based "e u v" lines.
/// Malformed input raises with the offending line number.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph_file(const std::string& path, GraphFormat format);
void write_graph(std::ostream& out, const Graph& g);

/// Weight file: "id value" lines (vertex kind) or "u v value" (edge kind).
WeightMap parse_weights(std::istream& in, const Graph& g);

nlohmann::json decomposition_to_json(const TreeDecomposition& t, int root = -1);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const MinorModel& m,
                             const OddColoring* coloring = nullptr);
MinorModel model_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const std::string& problem,
                                const DpSolution& s);

nlohmann::json pieces_to_json(const PieceDecomposition& pd);
PieceDecomposition pieces_from_json(const nlohmann::json& j);

}  // namespace mopt
