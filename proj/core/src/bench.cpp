#include "mopt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mopt/baker.hpp"
#include "mopt/bipartite.hpp"
#include "mopt/corpus.hpp"
#include "mopt/dp.hpp"
#include "mopt/gnc.hpp"
#include "mopt/hybrid.hpp"
#include "mopt/oracle.hpp"

namespace mopt {

namespace {

constexpr int kSmallN = 16;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

WeightMap random_vertex_weights(const Graph& g, std::mt19937_64& rng) {
  WeightMap w = WeightMap::unit_vertex(g);
  for (auto& [v, val] : w.vertex_values) val = 1 + static_cast<int>(rng() % 5);
  return w;
}

WeightMap random_edge_weights(const Graph& g, std::mt19937_64& rng) {
  WeightMap w = WeightMap::unit_edge(g);
  for (auto& [e, val] : w.edge_values) val = 1 + static_cast<int>(rng() % 5);
  return w;
}

// Brute-force optimum under forced in/out constraints; n <= 16 only.
std::int64_t forced_oracle(const Graph& g, const WeightMap& w,
                           const ForcedSets& forced, bool maximize_is) {
  const int n = g.num_vertices();
  std::uint32_t fin = 0, fout = 0;
  for (int v : forced.forced_in) fin |= 1u << v;
  for (int v : forced.forced_out) fout |= 1u << v;
  const auto edges = g.edges();
  std::int64_t best =
      maximize_is ? -1 : std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & fin) != fin || (mask & fout)) continue;
    bool feasible = true;
    for (auto [u, v] : edges) {
      const bool iu = mask >> u & 1, iv = mask >> v & 1;
      if (maximize_is ? (iu && iv) : (!iu && !iv)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    std::int64_t val = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) val += w.vertex_weight(v);
    if (maximize_is ? val > best : val < best) best = val;
  }
  return best;
}

ForcedSets random_forced(const Graph& g, std::mt19937_64& rng,
                         bool independent_in, bool independent_out) {
  ForcedSets f;
  std::vector<char> taken(g.num_vertices(), 0);
  auto independent_of = [&](int v, const std::vector<int>& set) {
    for (int u : set)
      if (g.has_edge(u, v)) return false;
    return true;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto roll = rng() % 10;
    if (roll == 0 && (!independent_in || independent_of(v, f.forced_in))) {
      f.forced_in.push_back(v);
      taken[v] = 1;
    } else if (roll == 1 && !taken[v] &&
               (!independent_out || independent_of(v, f.forced_out))) {
      // keep in/out disjoint and, for VC, forced_out edge-free
      bool clash = false;
      for (int u : f.forced_in)
        if (u == v) clash = true;
      if (!clash) f.forced_out.push_back(v);
    }
  }
  return f;
}

std::string forced_str(const ForcedSets& f) {
  std::ostringstream os;
  os << "in=";
  for (int v : f.forced_in) os << v << ';';
  os << " out=";
  for (int v : f.forced_out) os << v << ';';
  return os.str();
}

void push(SuiteResult& out, BenchRecord rec) {
  out.records.push_back(std::move(rec));
}

SuiteResult run_dp(std::uint64_t seed) {
  SuiteResult out;
  std::mt19937_64 rng(seed * 7919 + 13);
  for (std::uint64_t s = seed; s < seed + 4; ++s) {
    for (const auto& entry : corpus(s)) {
      const Graph& g = entry.g;
      if (g.num_vertices() > kSmallN) continue;
      const std::string id = std::to_string(s) + ":" + entry.name;
      const auto ntd = nice_decomposition(g);
      const WeightMap unit_v = WeightMap::unit_vertex(g);
      const WeightMap unit_e = WeightMap::unit_edge(g);
      const WeightMap rand_v = random_vertex_weights(g, rng);
      const WeightMap rand_e = random_edge_weights(g, rng);

      struct Case {
        std::string alg, params;
        DpSolution sol;
        std::int64_t oracle;
        double ms;
      };
      std::vector<Case> cases;
      auto timed = [&](const std::string& alg, const std::string& params,
                       auto&& solve, std::int64_t oracle) {
        Timer t;
        DpSolution sol = solve();
        cases.push_back({alg, params, std::move(sol), oracle, t.ms()});
      };

      timed("wis", "unit", [&] { return solve_wis(g, unit_v, ntd); },
            oracle_is(g, unit_v).value);
      timed("wis", "rand", [&] { return solve_wis(g, rand_v, ntd); },
            oracle_is(g, rand_v).value);
      timed("wvc", "unit", [&] { return solve_wvc(g, unit_v, ntd); },
            oracle_vc(g, unit_v).value);
      timed("wvc", "rand", [&] { return solve_wvc(g, rand_v, ntd); },
            oracle_vc(g, rand_v).value);
      {
        std::vector<int> all(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
        timed("ds", "unit", [&] { return solve_ds(g, ntd, all); },
              oracle_ds(g, unit_v).value);
      }
      timed("maxcut", "unit", [&] { return solve_maxcut(g, unit_e, ntd); },
            oracle_maxcut(g, unit_e).value);
      timed("maxcut", "rand", [&] { return solve_maxcut(g, rand_e, ntd); },
            oracle_maxcut(g, rand_e).value);
      timed("chromatic", "", [&] { return chromatic_number(g, ntd); },
            oracle_chromatic(g).value);

      {
        const ForcedSets f = random_forced(g, rng, true, false);
        timed("wis", "forced " + forced_str(f),
              [&] { return solve_wis(g, rand_v, ntd, f); },
              forced_oracle(g, rand_v, f, true));
      }
      {
        const ForcedSets f = random_forced(g, rng, false, true);
        timed("wvc", "forced " + forced_str(f),
              [&] { return solve_wvc(g, rand_v, ntd, f); },
              forced_oracle(g, rand_v, f, false));
      }

      for (auto& c : cases)
        push(out, {id, c.alg, c.params, c.sol.value, c.oracle,
                   c.sol.stats.width, c.sol.stats.table_entries, c.ms,
                   c.sol.value == c.oracle});
    }
  }
  out.pass = out.records.size() >= 500 && out.failures() == 0;
  return out;
}

SuiteResult run_ptas(std::uint64_t seed) {
  SuiteResult out;
  for (const auto& entry : corpus(seed)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > kSmallN || g.num_vertices() == 0) continue;
    const WeightMap unit_v = WeightMap::unit_vertex(g);
    const WeightMap unit_e = WeightMap::unit_edge(g);
    const std::int64_t opt_is = oracle_is(g, unit_v).value;
    const std::int64_t opt_cut = oracle_maxcut(g, unit_e).value;
    const std::int64_t opt_ds = oracle_ds(g, unit_v).value;
    for (int t = 3; t <= 4; ++t) {
      const std::string params = "t=" + std::to_string(t);
      const int cap = kLocalTreewidthSlope * (t + 2) + 4;
      {
        Timer tm;
        auto [sol, rep] = ptas_is(g, unit_v, t, cap);
        // value >= ceil((1 - 1/t) * opt)
        const std::int64_t bound = (opt_is * (t - 1) + t - 1) / t;
        const bool ok =
            sol.value >= bound && is_independent_set(g, sol.vertex_set) &&
            set_weight(unit_v, sol.vertex_set) == sol.value;
        push(out, {entry.name, "ptas-is", params, sol.value, opt_is,
                   sol.stats.width, sol.stats.table_entries, tm.ms(), ok});
      }
      {
        Timer tm;
        auto [sol, rep] = ptas_maxcut(g, unit_e, t, cap);
        const std::int64_t bound = (opt_cut * (t - 2) + t - 1) / t;
        const bool ok = sol.value >= bound &&
                        cut_value(g, unit_e, sol.assignment) == sol.value;
        push(out, {entry.name, "ptas-maxcut", params, sol.value, opt_cut,
                   sol.stats.width, sol.stats.table_entries, tm.ms(), ok});
      }
      {
        Timer tm;
        auto [sol, rep] = ptas_domset(g, t, cap);
        std::vector<int> all(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
        const std::int64_t bound = opt_ds + 2 * opt_ds / t;  // floor((1+2/t)x)
        const bool ok = sol.value <= bound && dominates(g, sol.vertex_set, all);
        push(out, {entry.name, "ptas-ds", params, sol.value, opt_ds,
                   sol.stats.width, sol.stats.table_entries, tm.ms(), ok});
      }
    }
  }
  out.pass = !out.records.empty() && out.failures() == 0;
  return out;
}

SuiteResult run_gnc(std::uint64_t seed) {
  SuiteResult out;
  for (const auto& entry : corpus(seed)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > kSmallN) continue;
    const std::int64_t opt = oracle_vc(g, WeightMap::unit_vertex(g)).value;
    for (int k = 0; k <= g.num_vertices(); ++k) {
      const bool expect = opt <= k;
      // kernel sanity, independent of the dispatch path
      bool kernel_ok = true;
      if (auto nt = kernel_vc_nt(g, k)) {
        kernel_ok = nt->graph.num_vertices() <= 2 * nt->k_prime;
        // induced subgraph of the input: vmap endpoints were adjacent, and
        // every input edge between surviving vertices survives
        std::vector<int> back(g.num_vertices(), -1);
        for (int v = 0; v < nt->graph.num_vertices(); ++v)
          back[nt->vmap[v]] = v;
        for (auto [u, v] : nt->graph.edges())
          if (!g.has_edge(nt->vmap[u], nt->vmap[v])) kernel_ok = false;
        for (auto [u, v] : g.edges())
          if (back[u] >= 0 && back[v] >= 0 &&
              !nt->graph.has_edge(back[u], back[v]))
            kernel_ok = false;
      }
      for (double beta : {0.0, 1.0, 8.0}) {
        GncConfig cfg;
        cfg.beta = beta;
        Timer tm;
        GncResult res = gnc_solve_vc(g, k, cfg);
        const bool ok = res.decision == expect && kernel_ok;
        push(out,
             {entry.name, "gnc",
              "k=" + std::to_string(k) + " beta=" + std::to_string(beta) +
                  " " + res.report.regime + "/" + res.report.method,
              res.decision ? 1 : 0, expect ? 1 : 0,
              res.report.decomposition_width, res.report.kernel_vertices,
              tm.ms(), ok});
      }
    }
  }
  out.pass = !out.records.empty() && out.failures() == 0;
  return out;
}

SuiteResult run_hybrid(std::uint64_t seed) {
  SuiteResult out;
  std::mt19937_64 rng(seed * 3571 + 7);
  // Koenig equality on 200 random bipartite graphs
  for (int i = 0; i < 200; ++i) {
    const int a = 1 + static_cast<int>(rng() % 8);
    const int b = 1 + static_cast<int>(rng() % 8);
    Graph g = make_random_bipartite(a, b, 0.4, seed * 6007 + i);
    Bipartition sides;
    for (int v = 0; v < a; ++v) sides.left.push_back(v);
    for (int v = a; v < a + b; ++v) sides.right.push_back(v);
    Timer tm;
    const auto matching = max_bipartite_matching(g, sides);
    const DpSolution vc = bip_weighted_vc(g, sides, WeightMap::unit_vertex(g));
    const bool ok =
        static_cast<std::int64_t>(matching.size()) == vc.value &&
        is_vertex_cover(g, vc.vertex_set);
    push(out, {"rand-bip-" + std::to_string(i), "koenig",
               "a=" + std::to_string(a) + " b=" + std::to_string(b), vc.value,
               static_cast<std::int64_t>(matching.size()), -1, 0, tm.ms(), ok});
    if (g.num_vertices() <= kSmallN) {
      WeightMap w = random_vertex_weights(g, rng);
      Timer tw;
      const DpSolution wvc = bip_weighted_vc(g, sides, w);
      const std::int64_t opt = oracle_vc(g, w).value;
      push(out, {"rand-bip-" + std::to_string(i), "bip-wvc", "rand",
                 wvc.value, opt, -1, 0, tw.ms(), wvc.value == opt});
    }
  }
  // hybrid solver vs oracle on the composites
  for (const auto& entry : composite_corpus(seed)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > kSmallN) continue;
    const auto issues = validate_pieces(g, entry.pieces);
    if (!issues.empty()) {
      push(out, {entry.name, "pieces", issues.front(), 0, std::nullopt, -1, 0,
                 0, false});
      continue;
    }
    for (int wv = 0; wv < 2; ++wv) {
      const WeightMap w = wv ? random_vertex_weights(g, rng)
                             : WeightMap::unit_vertex(g);
      const std::string params = wv ? "rand" : "unit";
      {
        Timer tm;
        DpSolution sol =
            hybrid_solve(g, entry.pieces, HybridProblem::vertex_cover, w);
        const std::int64_t opt = oracle_vc(g, w).value;
        push(out, {entry.name, "hybrid-vc", params, sol.value, opt,
                   sol.stats.width, sol.stats.table_entries, tm.ms(),
                   sol.value == opt});
      }
      {
        Timer tm;
        DpSolution sol =
            hybrid_solve(g, entry.pieces, HybridProblem::independent_set, w);
        const std::int64_t opt = oracle_is(g, w).value;
        push(out, {entry.name, "hybrid-is", params, sol.value, opt,
                   sol.stats.width, sol.stats.table_entries, tm.ms(),
                   sol.value == opt});
      }
    }
  }
  out.pass = !out.records.empty() && out.failures() == 0;
  return out;
}

}  // namespace

Suite suite_from_name(const std::string& name) {
  if (name == "dp") return Suite::dp;
  if (name == "ptas") return Suite::ptas;
  if (name == "gnc") return Suite::gnc;
  if (name == "hybrid") return Suite::hybrid;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const BenchRecord& r) { return !r.ok; }));
}

SuiteResult bench_run(Suite suite, std::uint64_t seed) {
  switch (suite) {
    case Suite::dp:
      return run_dp(seed);
    case Suite::ptas:
      return run_ptas(seed);
    case Suite::gnc:
      return run_gnc(seed);
    case Suite::hybrid:
      return run_hybrid(seed);
  }
  throw std::logic_error("unreachable");
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "instance,algorithm,params,value,oracle,width,table_entries,ok\n";
  for (const auto& r : records) {
    out << r.instance << ',' << r.algorithm << ',' << '"' << r.params << '"'
        << ',' << r.value << ',';
    if (r.oracle_value) out << *r.oracle_value;
    out << ',' << r.width << ',' << r.table_entries << ','
        << (r.ok ? "true" : "false") << '\n';
  }
}

nlohmann::json records_to_json(const std::vector<BenchRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"instance", r.instance},
                     {"algorithm", r.algorithm},
                     {"params", r.params},
                     {"value", r.value},
                     {"width", r.width},
                     {"table_entries", r.table_entries},
                     {"ok", r.ok}};
    if (r.oracle_value)
      j["oracle"] = *r.oracle_value;
    else
      j["oracle"] = nullptr;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace mopt
