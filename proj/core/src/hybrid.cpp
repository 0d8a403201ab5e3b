#include "mopt/hybrid.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "mopt/treedec.hpp"

namespace mopt {

namespace {

std::vector<char> member_flags(int n, const std::vector<int>& vs) {
  std::vector<char> f(n, 0);
  for (int v : vs) f[v] = 1;
  return f;
}

}  // namespace

std::vector<std::string> validate_pieces(const Graph& g,
                                         const PieceDecomposition& pd) {
  std::vector<std::string> bad;
  const int n = g.num_vertices();
  std::vector<int> piece_count(n, 0);
  for (const auto& p : pd.pieces)
    for (int v : p.vertices) {
      if (v < 0 || v >= n) {
        bad.push_back("piece vertex out of range");
        return bad;
      }
      ++piece_count[v];
    }
  for (int v = 0; v < n; ++v)
    if (piece_count[v] == 0)
      bad.push_back("vertex " + std::to_string(v) + " in no piece");

  const auto boundary = member_flags(n, pd.boundary);
  for (int v = 0; v < n; ++v)
    if (piece_count[v] >= 2 && !boundary[v])
      bad.push_back("shared vertex " + std::to_string(v) + " not in boundary");

  for (auto [u, v] : g.edges()) {
    bool inside = false;
    for (const auto& p : pd.pieces) {
      const auto in = member_flags(n, p.vertices);
      if (in[u] && in[v]) {
        inside = true;
        break;
      }
    }
    if (!inside)
      bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                    " crosses pieces");
  }

  for (size_t i = 0; i < pd.pieces.size(); ++i) {
    if (pd.pieces[i].kind != PieceKind::bipartite) continue;
    std::vector<int> interior;
    for (int v : pd.pieces[i].vertices)
      if (!boundary[v]) interior.push_back(v);
    auto [sub, map] = induced_subgraph(g, interior);
    if (!is_bipartite(sub))
      bad.push_back("piece " + std::to_string(i) +
                    " declared bipartite but has an odd cycle outside the "
                    "boundary");
  }
  return bad;
}

namespace {

struct PieceContext {
  Graph sub;
  std::vector<int> to_old;               // piece id -> host id
  std::vector<int> boundary_local;       // local ids of boundary vertices
  WeightMap weights;                     // boundary weights zeroed
  std::optional<NiceTreeDecomposition> ntd;  // treewidth pieces only
  PieceKind kind;
};

// Piece solution under a boundary assignment, in host vertex ids.
struct PieceOutcome {
  std::int64_t value = 0;
  std::vector<int> chosen;
};

// Vertex cover of a bipartite piece conditioned on the boundary: forced-in
// vertices are deleted outright, every neighbor of a forced-out vertex goes
// into the cover, the bipartite remainder goes through min-cut.
PieceOutcome solve_bip_piece_vc(const PieceContext& ctx,
                                const std::vector<char>& fin,
                                const std::vector<char>& fout) {
  const int n = ctx.sub.num_vertices();
  std::vector<char> removed(n, 0), taken(n, 0);
  for (int v = 0; v < n; ++v)
    if (fin[v] || fout[v]) removed[v] = 1;
  PieceOutcome out;
  for (int v = 0; v < n; ++v) {
    if (!fout[v]) continue;
    for (int u : ctx.sub.neighbors(v)) {
      if (fout[u])
        throw std::invalid_argument("hybrid: edge with both ends forced out");
      if (!fin[u] && !taken[u]) {
        taken[u] = 1;
        removed[u] = 1;
        out.value += ctx.weights.vertex_weight(u);
        out.chosen.push_back(ctx.to_old[u]);
      }
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) rest.push_back(v);
  auto [sub2, map2] = induced_subgraph(ctx.sub, rest);
  auto colored = two_coloring(sub2);
  if (!std::holds_alternative<TwoColoring>(colored))
    throw std::logic_error("hybrid: bipartite piece remainder not bipartite");
  const auto& color = std::get<TwoColoring>(colored).color;
  Bipartition sides;
  for (int v = 0; v < sub2.num_vertices(); ++v)
    (color[v] == 0 ? sides.left : sides.right).push_back(v);
  WeightMap w;
  for (int v = 0; v < sub2.num_vertices(); ++v)
    w.vertex_values[v] = ctx.weights.vertex_weight(map2[v]);
  DpSolution cover = bip_weighted_vc(sub2, sides, w);
  out.value += cover.value;
  for (int v : cover.vertex_set) out.chosen.push_back(ctx.to_old[map2[v]]);
  return out;
}

// Independent set of a bipartite piece: boundary vertices and the neighbors
// of selected boundary vertices leave the graph, the remainder is a plain
// maximum-weight IS.
PieceOutcome solve_bip_piece_is(const PieceContext& ctx,
                                const std::vector<char>& fin,
                                const std::vector<char>& fout) {
  const int n = ctx.sub.num_vertices();
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (fin[v] || fout[v]) removed[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (!fin[v]) continue;
    for (int u : ctx.sub.neighbors(v)) {
      if (fin[u])
        throw std::invalid_argument("hybrid: adjacent vertices forced in");
      removed[u] = 1;
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) rest.push_back(v);
  auto [sub2, map2] = induced_subgraph(ctx.sub, rest);
  auto colored = two_coloring(sub2);
  if (!std::holds_alternative<TwoColoring>(colored))
    throw std::logic_error("hybrid: bipartite piece remainder not bipartite");
  const auto& color = std::get<TwoColoring>(colored).color;
  Bipartition sides;
  for (int v = 0; v < sub2.num_vertices(); ++v)
    (color[v] == 0 ? sides.left : sides.right).push_back(v);
  WeightMap w;
  for (int v = 0; v < sub2.num_vertices(); ++v)
    w.vertex_values[v] = ctx.weights.vertex_weight(map2[v]);
  DpSolution is = bip_weighted_is(sub2, sides, w);
  PieceOutcome out;
  out.value = is.value;
  for (int v : is.vertex_set) out.chosen.push_back(ctx.to_old[map2[v]]);
  return out;
}

}  // namespace

DpSolution hybrid_solve(const Graph& g, const PieceDecomposition& pd,
                        HybridProblem problem, const WeightMap& weights,
                        int width_cap) {
  auto bad = validate_pieces(g, pd);
  if (!bad.empty())
    throw std::invalid_argument("hybrid: invalid decomposition: " + bad[0]);
  const int b = static_cast<int>(pd.boundary.size());
  if (b > 20) throw std::invalid_argument("hybrid: boundary cap exceeded");

  const int n = g.num_vertices();
  const auto is_boundary = member_flags(n, pd.boundary);

  std::vector<PieceContext> ctx(pd.pieces.size());
  int max_width = 0;
  for (size_t i = 0; i < pd.pieces.size(); ++i) {
    auto [sub, map] = induced_subgraph(g, pd.pieces[i].vertices);
    ctx[i].sub = std::move(sub);
    ctx[i].to_old = map;
    ctx[i].kind = pd.pieces[i].kind;
    for (int v = 0; v < ctx[i].sub.num_vertices(); ++v) {
      const int old = ctx[i].to_old[v];
      ctx[i].weights.vertex_values[v] =
          is_boundary[old] ? 0 : weights.vertex_weight(old);
      if (is_boundary[old]) ctx[i].boundary_local.push_back(v);
    }
    if (ctx[i].kind == PieceKind::bounded_treewidth) {
      auto td = heuristic_decompose(ctx[i].sub, EliminationStrategy::min_degree);
      if (td.width() > width_cap)
        throw std::invalid_argument("hybrid: piece width exceeds cap");
      max_width = std::max(max_width, td.width());
      ctx[i].ntd = make_nice(td);
    }
  }

  const bool minimize = problem == HybridProblem::vertex_cover;
  std::optional<DpSolution> best;
  long table_entries = 0;

  for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
    std::vector<char> selected(n, 0);
    for (int i = 0; i < b; ++i)
      if ((mask >> i) & 1) selected[pd.boundary[i]] = 1;

    // Boundary-internal edges must already be consistent.
    bool ok = true;
    for (int i = 0; i < b && ok; ++i)
      for (int j = i + 1; j < b && ok; ++j)
        if (g.has_edge(pd.boundary[i], pd.boundary[j])) {
          const bool si = selected[pd.boundary[i]],
                     sj = selected[pd.boundary[j]];
          if (minimize ? (!si && !sj) : (si && sj)) ok = false;
        }
    if (!ok) continue;

    std::int64_t value = 0;
    std::vector<int> chosen;
    for (int i = 0; i < b; ++i)
      if ((mask >> i) & 1) {
        value += weights.vertex_weight(pd.boundary[i]);
        chosen.push_back(pd.boundary[i]);
      }

    bool feasible = true;
    for (auto& pc : ctx) {
      ForcedSets forced;
      std::vector<char> fin(pc.sub.num_vertices(), 0),
          fout(pc.sub.num_vertices(), 0);
      for (int v : pc.boundary_local) {
        if (selected[pc.to_old[v]]) {
          forced.forced_in.push_back(v);
          fin[v] = 1;
        } else {
          forced.forced_out.push_back(v);
          fout[v] = 1;
        }
      }
      try {
        if (pc.kind == PieceKind::bounded_treewidth) {
          DpSolution s = minimize
                             ? solve_wvc(pc.sub, pc.weights, *pc.ntd, forced)
                             : solve_wis(pc.sub, pc.weights, *pc.ntd, forced);
          table_entries += s.stats.table_entries;
          value += s.value;
          for (int v : s.vertex_set)
            if (!is_boundary[pc.to_old[v]]) chosen.push_back(pc.to_old[v]);
        } else {
          PieceOutcome s = minimize ? solve_bip_piece_vc(pc, fin, fout)
                                    : solve_bip_piece_is(pc, fin, fout);
          value += s.value;
          for (int v : s.chosen) chosen.push_back(v);
        }
      } catch (const std::invalid_argument&) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    if (!best || (minimize ? value < best->value : value > best->value)) {
      DpSolution cand;
      cand.value = value;
      cand.vertex_set = std::move(chosen);
      best = std::move(cand);
    }
  }
  if (!best) throw std::invalid_argument("hybrid: no feasible assignment");

  // Global audits: feasibility and single-counted boundary weights.
  if (minimize) {
    if (!is_vertex_cover(g, best->vertex_set))
      throw std::logic_error("hybrid: certificate is not a cover");
  } else {
    if (!is_independent_set(g, best->vertex_set))
      throw std::logic_error("hybrid: certificate is not independent");
  }
  if (set_weight(weights, best->vertex_set) != best->value)
    throw std::logic_error("hybrid: certificate does not re-score to value");
  best->stats.width = max_width;
  best->stats.table_entries = table_entries;
  return *best;
}

}  // namespace mopt
