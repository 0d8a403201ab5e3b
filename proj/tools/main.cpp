#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mopt/baker.hpp"
#include "mopt/bench.hpp"
#include "mopt/bipartite.hpp"
#include "mopt/corpus.hpp"
#include "mopt/dp.hpp"
#include "mopt/gnc.hpp"
#include "mopt/hybrid.hpp"
#include "mopt/io.hpp"
#include "mopt/oracle.hpp"
#include "mopt/treedec.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitParseError = 4;

struct CommonOpts {
  std::string input;
  std::string format = "edgelist";
  std::string output;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool graph_required = true) {
  auto* in = cmd->add_option("--input", opts.input, "input graph file");
  if (graph_required) in->required();
  cmd->add_option("--format", opts.format, "edgelist|dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  cmd->add_option("--output", opts.output, "write result here (else stdout)");
  cmd->add_flag("--json", opts.json, "emit JSON");
}

mopt::Graph load_graph(const CommonOpts& opts) {
  return mopt::parse_graph_file(opts.input,
                                opts.format == "dimacs"
                                    ? mopt::GraphFormat::dimacs
                                    : mopt::GraphFormat::edgelist);
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw std::runtime_error("cannot open " + opts.output);
  out << text;
}

mopt::WeightMap load_weights(const std::string& path, const mopt::Graph& g,
                             bool edge_kind) {
  if (path.empty())
    return edge_kind ? mopt::WeightMap::unit_edge(g)
                     : mopt::WeightMap::unit_vertex(g);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return mopt::parse_weights(in, g);
}

int cmd_tw(const CommonOpts& opts, const std::string& method) {
  const mopt::Graph g = load_graph(opts);
  const auto td = mopt::heuristic_decompose(
      g, method == "min_fill" ? mopt::EliminationStrategy::min_fill
                              : mopt::EliminationStrategy::min_degree);
  if (opts.json) {
    nlohmann::json j = mopt::decomposition_to_json(td);
    j["width"] = td.width();
    emit(opts, j.dump(2));
  } else {
    emit(opts, "width " + std::to_string(td.width()));
  }
  return kExitOk;
}

int cmd_partition(const CommonOpts& opts, int t) {
  const mopt::Graph g = load_graph(opts);
  const auto part = mopt::baker_partition(g, t);
  if (opts.json) {
    nlohmann::json j{{"t", part.t}, {"classes", part.classes}};
    j["levels"] = part.levels.level;
    emit(opts, j.dump(2));
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
      os << "class " << i << ":";
      for (int v : part.classes[i]) os << ' ' << v;
      os << '\n';
    }
    emit(opts, os.str());
  }
  return kExitOk;
}

int emit_solution(const CommonOpts& opts, const std::string& problem,
                  const mopt::DpSolution& sol) {
  if (opts.json) {
    emit(opts, mopt::solution_to_json(problem, sol).dump(2));
  } else {
    std::ostringstream os;
    os << problem << ' ' << sol.value << '\n';
    emit(opts, os.str());
  }
  return kExitOk;
}

int cmd_solve(const CommonOpts& opts, const std::string& problem,
              const std::string& engine, const std::string& weights_path) {
  const mopt::Graph g = load_graph(opts);
  const bool edge_kind = problem == "maxcut";
  const mopt::WeightMap w = load_weights(weights_path, g, edge_kind);
  if (engine == "bip") {
    if (problem != "is" && problem != "vc")
      throw CLI::ValidationError("--engine bip supports is and vc only");
    const auto tc = mopt::two_coloring(g);
    if (!std::holds_alternative<mopt::TwoColoring>(tc)) {
      std::cerr << "input graph is not bipartite\n";
      return kExitInfeasible;
    }
    const auto& coloring = std::get<mopt::TwoColoring>(tc);
    mopt::Bipartition sides;
    for (int v = 0; v < g.num_vertices(); ++v)
      (coloring.color[v] == 0 ? sides.left : sides.right).push_back(v);
    const auto sol = problem == "vc" ? mopt::bip_weighted_vc(g, sides, w)
                                     : mopt::bip_weighted_is(g, sides, w);
    return emit_solution(opts, problem, sol);
  }
  const auto ntd = mopt::nice_decomposition(g);
  mopt::DpSolution sol;
  if (problem == "is") {
    sol = mopt::solve_wis(g, w, ntd);
  } else if (problem == "vc") {
    sol = mopt::solve_wvc(g, w, ntd);
  } else if (problem == "ds") {
    std::vector<int> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
    sol = mopt::solve_ds(g, ntd, all);
  } else if (problem == "maxcut") {
    sol = mopt::solve_maxcut(g, w, ntd);
  } else {
    sol = mopt::chromatic_number(g, ntd);
  }
  return emit_solution(opts, problem, sol);
}

int cmd_ptas(const CommonOpts& opts, const std::string& problem, int t,
             int width_cap, const std::string& weights_path) {
  const mopt::Graph g = load_graph(opts);
  mopt::DpSolution sol;
  mopt::ApproxReport rep;
  if (problem == "is") {
    std::tie(sol, rep) =
        mopt::ptas_is(g, load_weights(weights_path, g, false), t, width_cap);
  } else if (problem == "maxcut") {
    std::tie(sol, rep) = mopt::ptas_maxcut(
        g, load_weights(weights_path, g, true), t, width_cap);
  } else if (problem == "ds") {
    std::tie(sol, rep) = mopt::ptas_domset(g, t, width_cap);
  } else {
    throw CLI::ValidationError("ptas supports is, maxcut, ds");
  }
  if (opts.json) {
    nlohmann::json j = mopt::solution_to_json(problem, sol);
    j["guarantee"] = rep.guarantee;
    j["shift"] = rep.shift;
    j["widths"] = rep.widths;
    emit(opts, j.dump(2));
    return kExitOk;
  }
  return emit_solution(opts, problem, sol);
}

int cmd_gnc(const CommonOpts& opts, int k, double beta) {
  const mopt::Graph g = load_graph(opts);
  mopt::GncConfig cfg;
  cfg.beta = beta;
  const mopt::GncResult res = mopt::gnc_solve_vc(g, k, cfg);
  if (opts.json) {
    nlohmann::json j{{"decision", res.decision},
                     {"k", k},
                     {"regime", res.report.regime},
                     {"method", res.report.method},
                     {"kernel_vertices", res.report.kernel_vertices},
                     {"decomposition_width", res.report.decomposition_width},
                     {"predicted_exponent", res.report.predicted_exponent}};
    if (res.certificate)
      j["certificate"] = *res.certificate;
    else
      j["certificate"] = nullptr;
    emit(opts, j.dump(2));
  } else {
    emit(opts, res.decision ? "yes" : "no");
  }
  return res.decision ? kExitOk : kExitInfeasible;
}

int cmd_oddminor(const CommonOpts& opts, const std::string& pieces_path,
                 const std::string& problem, const std::string& weights_path) {
  const mopt::Graph g = load_graph(opts);
  std::ifstream in(pieces_path);
  if (!in) throw std::runtime_error("cannot open " + pieces_path);
  nlohmann::json pj;
  in >> pj;
  const mopt::PieceDecomposition pd = mopt::pieces_from_json(pj);
  const auto issues = mopt::validate_pieces(g, pd);
  if (!issues.empty()) {
    std::cerr << "invalid piece decomposition: " << issues.front() << '\n';
    return kExitInfeasible;
  }
  const mopt::WeightMap w = load_weights(weights_path, g, false);
  const auto sol = mopt::hybrid_solve(
      g, pd,
      problem == "is" ? mopt::HybridProblem::independent_set
                      : mopt::HybridProblem::vertex_cover,
      w);
  return emit_solution(opts, problem, sol);
}

int cmd_oracle(const CommonOpts& opts, const std::string& problem,
               const std::string& weights_path) {
  const mopt::Graph g = load_graph(opts);
  const bool edge_kind = problem == "maxcut";
  const mopt::WeightMap w = load_weights(weights_path, g, edge_kind);
  mopt::OracleResult res;
  if (problem == "is")
    res = mopt::oracle_is(g, w);
  else if (problem == "vc")
    res = mopt::oracle_vc(g, w);
  else if (problem == "ds")
    res = mopt::oracle_ds(g, w);
  else if (problem == "maxcut")
    res = mopt::oracle_maxcut(g, w);
  else
    res = mopt::oracle_chromatic(g);
  if (opts.json) {
    nlohmann::json j{{"problem", res.problem},
                     {"value", res.value},
                     {"certificate", res.certificate}};
    emit(opts, j.dump(2));
  } else {
    emit(opts, res.problem + " " + std::to_string(res.value));
  }
  return kExitOk;
}

int cmd_bench(const CommonOpts& opts, const std::string& suite,
              std::uint64_t seed) {
  const mopt::SuiteResult res =
      mopt::bench_run(mopt::suite_from_name(suite), seed);
  if (opts.json) {
    nlohmann::json j{{"suite", suite},
                     {"seed", seed},
                     {"pass", res.pass},
                     {"records", mopt::records_to_json(res.records)}};
    emit(opts, j.dump(2));
  } else {
    std::ostringstream os;
    mopt::write_csv(os, res.records);
    emit(opts, os.str());
  }
  std::cerr << "suite " << suite << ": " << res.records.size() << " records, "
            << res.failures() << " failures\n";
  return res.pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph optimization toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string problem = "is", engine = "dp", method = "min_degree";
  std::string weights_path, pieces_path, suite = "dp";
  int t = 3, k = 0, width_cap = 25;
  double beta = 1.0;
  std::uint64_t seed = 1;

  auto* tw = app.add_subcommand("tw", "tree decomposition width");
  add_common(tw, opts);
  tw->add_option("--method", method, "min_degree|min_fill")
      ->check(CLI::IsMember({"min_degree", "min_fill"}));

  auto* partition = app.add_subcommand("partition", "BFS residue classes");
  add_common(partition, opts);
  partition->add_option("--t", t, "number of residue classes")->required();

  auto* solve = app.add_subcommand("solve", "exact solve");
  add_common(solve, opts);
  solve->add_option("--problem", problem, "is|vc|ds|maxcut|chromatic")
      ->required()
      ->check(CLI::IsMember({"is", "vc", "ds", "maxcut", "chromatic"}));
  solve->add_option("--engine", engine, "dp|bip")
      ->check(CLI::IsMember({"dp", "bip"}));
  solve->add_option("--weights", weights_path, "weight file");

  auto* ptas = app.add_subcommand("ptas", "approximation schemes");
  add_common(ptas, opts);
  ptas->add_option("--problem", problem, "is|maxcut|ds")
      ->required()
      ->check(CLI::IsMember({"is", "maxcut", "ds"}));
  ptas->add_option("--t", t, "accuracy parameter")->required();
  ptas->add_option("--width-cap", width_cap, "decomposition width cap");
  ptas->add_option("--weights", weights_path, "weight file");

  auto* gnc = app.add_subcommand("gnc", "vertex cover decision");
  add_common(gnc, opts);
  gnc->add_option("--k", k, "cover size budget")->required();
  gnc->add_option("--beta", beta, "regime threshold multiplier");

  auto* oddminor = app.add_subcommand("oddminor", "solve over pieces");
  add_common(oddminor, opts);
  oddminor->add_option("--pieces", pieces_path, "piece decomposition JSON")
      ->required();
  oddminor->add_option("--problem", problem, "vc|is")
      ->check(CLI::IsMember({"vc", "is"}));
  oddminor->add_option("--weights", weights_path, "weight file");

  auto* oracle = app.add_subcommand("oracle", "exhaustive reference solve");
  add_common(oracle, opts);
  oracle->add_option("--problem", problem, "is|vc|ds|maxcut|chromatic")
      ->required()
      ->check(CLI::IsMember({"is", "vc", "ds", "maxcut", "chromatic"}));
  oracle->add_option("--weights", weights_path, "weight file");

  auto* bench = app.add_subcommand("bench", "acceptance suites");
  add_common(bench, opts, /*graph_required=*/false);
  bench->add_option("--suite", suite, "dp|ptas|gnc|hybrid")
      ->required()
      ->check(CLI::IsMember({"dp", "ptas", "gnc", "hybrid"}));
  bench->add_option("--seed", seed, "corpus seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tw->parsed()) return cmd_tw(opts, method);
    if (partition->parsed()) return cmd_partition(opts, t);
    if (solve->parsed()) return cmd_solve(opts, problem, engine, weights_path);
    if (ptas->parsed())
      return cmd_ptas(opts, problem, t, width_cap, weights_path);
    if (gnc->parsed()) return cmd_gnc(opts, k, beta);
    if (oddminor->parsed())
      return cmd_oddminor(opts, pieces_path, problem, weights_path);
    if (oracle->parsed()) return cmd_oracle(opts, problem, weights_path);
    if (bench->parsed()) return cmd_bench(opts, suite, seed);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    std::cerr << what << '\n';
    if (what.find("cap") != std::string::npos ||
        what.find("too large") != std::string::npos)
      return kExitCapExceeded;
    return kExitInfeasible;
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    std::cerr << what << '\n';
    if (what.find("parse error") != std::string::npos ||
        what.find("cannot open") != std::string::npos)
      return kExitParseError;
    return 1;
  }
  return kExitOk;
}
