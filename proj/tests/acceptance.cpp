// Acceptance gate: eight checks, one pass/fail line each, nonzero exit on
// any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "mopt/baker.hpp"
#include "mopt/bench.hpp"
#include "mopt/corpus.hpp"
#include "mopt/dp.hpp"
#include "mopt/gnc.hpp"
#include "mopt/minor.hpp"
#include "mopt/oracle.hpp"
#include "mopt/treedec.hpp"

using namespace mopt;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s (%s)\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++failures;
}

void run_suite(int criterion, Suite suite, std::size_t min_records) {
  const SuiteResult res = bench_run(suite, 1);
  const bool pass =
      res.pass && res.failures() == 0 && res.records.size() >= min_records;
  report(criterion, pass,
         std::to_string(res.records.size()) + " records, " +
             std::to_string(res.failures()) + " failures");
}

void criterion_2() {
  std::size_t checked = 0;
  bool pass = true;
  for (const auto& entry : corpus(1)) {
    const Graph& g = entry.g;
    if (g.num_vertices() == 0) continue;
    for (int t = 2; t <= 4; ++t) {
      const auto part = baker_partition(g, t);
      std::vector<int> seen(g.num_vertices(), 0);
      for (int i = 0; i < t; ++i)
        for (int v : part.classes[i]) {
          ++seen[v];
          if (part.levels.level[v] % t != i) pass = false;
        }
      for (int c : seen)
        if (c != 1) pass = false;
      const bool gridlike = entry.name.rfind("grid", 0) == 0 ||
                            entry.name.rfind("subgrid", 0) == 0;
      if (gridlike) {
        for (int i = 0; i < t; ++i) {
          std::vector<int> keep;
          for (int v = 0; v < g.num_vertices(); ++v)
            if (part.levels.level[v] % t != i) keep.push_back(v);
          auto [sub, map] = induced_subgraph(g, keep);
          if (heuristic_decompose(sub, EliminationStrategy::min_degree)
                  .width() > 3 * t - 1)
            pass = false;
        }
      }
      ++checked;
    }
  }
  report(2, pass, std::to_string(checked) + " (graph, t) partitions checked");
}

void criterion_4() {
  std::size_t checked = 0;
  bool pass = true;
  for (const auto& entry : corpus(1)) {
    const Graph& g = entry.g;
    if (g.num_vertices() > 14 || g.num_vertices() == 0) continue;
    const auto chi = oracle_chromatic(g).value;
    auto [a, b] = decompose_two_parts(g);
    auto [colors, rep] = two_part_color(g, a, b, 25);
    if (!is_proper_coloring(g, colors)) pass = false;
    std::set<int> used(colors.begin(), colors.end());
    if (static_cast<std::int64_t>(used.size()) > 2 * chi) pass = false;
    ++checked;
  }
  report(4, pass, std::to_string(checked) + " colorings checked");
}

void criterion_6() {
  bool pass = true;
  double worst = 0;
  std::size_t checked = 0;
  for (int r = 2; r <= 10; ++r)
    for (int c = r; c <= 10; ++c) {
      const int k = r * c / 2;  // grid VC optimum (Koenig, perfect matchings)
      if (k > 50) continue;
      const Graph g = make_grid(r, c);
      const auto kernel = kernel_vc_nt(g, k);
      if (!kernel || kernel->graph.num_vertices() == 0) continue;
      const int width =
          heuristic_decompose(kernel->graph, EliminationStrategy::min_degree)
              .width();
      const double ratio =
          width / std::sqrt(static_cast<double>(kernel->graph.num_vertices()));
      worst = std::max(worst, ratio);
      if (ratio > 4.0) pass = false;
      ++checked;
    }
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "%zu kernels, worst width/sqrt(n) = %.3f", checked, worst);
  report(6, pass && checked > 0, detail);
}

void criterion_8() {
  const Graph k3 = make_complete(3);
  std::size_t checked = 0;
  bool pass = true;
  for (const auto& entry : corpus(1)) {
    if (entry.g.num_vertices() > 12) continue;
    const bool bip = is_bipartite(entry.g);
    if (has_odd_minor(entry.g, k3) != !bip) pass = false;
    ++checked;
  }
  report(8, pass, std::to_string(checked) + " graphs checked");
}

}  // namespace

int main() {
  run_suite(1, Suite::dp, 500);
  criterion_2();
  run_suite(3, Suite::ptas, 1);
  criterion_4();
  run_suite(5, Suite::gnc, 1);
  criterion_6();
  run_suite(7, Suite::hybrid, 1);
  criterion_8();
  return failures == 0 ? 0 : 1;
}
