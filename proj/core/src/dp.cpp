#include "mopt/dp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mopt/bitset.hpp"

namespace mopt {

namespace {

struct Entry {
  std::int64_t value = 0;
  VBits cert;
  bool ok = false;
};

// max-sense: higher value wins, ties to the lexicographically smaller set.
void improve_max(Entry& slot, std::int64_t value, const VBits& cert) {
  if (!slot.ok || value > slot.value ||
      (value == slot.value && cert.lex_less(slot.cert))) {
    slot.value = value;
    slot.cert = cert;
    slot.ok = true;
  }
}

void improve_min(Entry& slot, std::int64_t value, const VBits& cert) {
  if (!slot.ok || value < slot.value ||
      (value == slot.value && cert.lex_less(slot.cert))) {
    slot.value = value;
    slot.cert = cert;
    slot.ok = true;
  }
}

int position_of(const std::vector<int>& bag, int v) {
  return static_cast<int>(
      std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Bag-position neighbors of v within `bag`.
std::vector<int> bag_neighbor_positions(const Graph& g,
                                        const std::vector<int>& bag, int v) {
  std::vector<int> out;
  for (size_t i = 0; i < bag.size(); ++i)
    if (bag[i] != v && g.has_edge(v, bag[i])) out.push_back(static_cast<int>(i));
  return out;
}

std::uint32_t remove_bit(std::uint32_t mask, int p) {
  const std::uint32_t low = mask & ((1u << p) - 1);
  return low | ((mask >> (p + 1)) << p);
}

std::uint32_t insert_bit(std::uint32_t mask, int p, int bit) {
  const std::uint32_t low = mask & ((1u << p) - 1);
  return low | (static_cast<std::uint32_t>(bit) << p) |
         ((mask >> p) << (p + 1));
}

void check_inputs(const Graph& g, const NiceTreeDecomposition& ntd) {
  if (ntd.host_n != g.num_vertices())
    throw std::invalid_argument("dp: decomposition does not match graph");
  for (size_t i = 0; i < ntd.nodes.size(); ++i)
    for (int c : ntd.nodes[i].children)
      if (c < 0 || c >= static_cast<int>(i))
        throw std::invalid_argument("dp: nodes not in bottom-up order");
  if (ntd.nodes[ntd.root].bag.size() != 0)
    throw std::invalid_argument("dp: root bag not empty");
}

void check_weight_range(const WeightMap& w) {
  if (w.total() > (std::int64_t{1} << 62))
    throw std::overflow_error("dp: total weight too large for 64-bit sums");
}

std::pair<std::vector<char>, std::vector<char>> forced_flags(
    const Graph& g, const ForcedSets& forced) {
  std::vector<char> fin(g.num_vertices(), 0), fout(g.num_vertices(), 0);
  for (int v : forced.forced_in) {
    if (!g.has_vertex(v)) throw std::invalid_argument("forced_in id invalid");
    fin[v] = 1;
  }
  for (int v : forced.forced_out) {
    if (!g.has_vertex(v)) throw std::invalid_argument("forced_out id invalid");
    if (fin[v]) throw std::invalid_argument("forced sets overlap");
    fout[v] = 1;
  }
  return {fin, fout};
}

// Shared frame for the subset-state engines (WIS / WVC / MaxCut).
struct SubsetTables {
  std::vector<std::vector<Entry>> table;
  long entries = 0;

  std::vector<Entry>& fresh(int node, size_t size) {
    table[node].assign(size, Entry{});
    entries += static_cast<long>(size);
    return table[node];
  }
};

DpSolution finish(const NiceTreeDecomposition& ntd, const Entry& root,
                  long entries, const char* what) {
  if (!root.ok) throw std::invalid_argument(std::string("dp: infeasible ") + what);
  DpSolution out;
  out.value = root.value;
  out.vertex_set = root.cert.members();
  out.stats.width = ntd.width();
  out.stats.nodes = static_cast<int>(ntd.nodes.size());
  out.stats.table_entries = entries;
  return out;
}

}  // namespace

DpSolution solve_wis(const Graph& g, const WeightMap& weights,
                     const NiceTreeDecomposition& ntd,
                     const ForcedSets& forced) {
  check_inputs(g, ntd);
  check_weight_range(weights);
  auto [fin, fout] = forced_flags(g, forced);
  if (!is_independent_set(g, forced.forced_in))
    throw std::invalid_argument("solve_wis: forced_in is not independent");

  SubsetTables frame;
  frame.table.resize(ntd.nodes.size());
  const int n = g.num_vertices();

  for (size_t ni = 0; ni < ntd.nodes.size(); ++ni) {
    const auto& nd = ntd.nodes[ni];
    const int b = static_cast<int>(nd.bag.size());
    auto& tab = frame.fresh(static_cast<int>(ni), 1u << b);
    switch (nd.kind) {
      case NodeKind::leaf:
        tab[0] = {0, VBits(n), true};
        break;
      case NodeKind::introduce: {
        const auto& child = frame.table[nd.children[0]];
        const int p = position_of(nd.bag, nd.vertex);
        const auto nbp = bag_neighbor_positions(g, nd.bag, nd.vertex);
        for (std::uint32_t m = 0; m < tab.size(); ++m) {
          const bool has_v = (m >> p) & 1;
          if (has_v && fout[nd.vertex]) continue;
          if (!has_v && fin[nd.vertex]) continue;
          if (has_v) {
            bool clash = false;
            for (int q : nbp)
              if ((m >> q) & 1) {
                clash = true;
                break;
              }
            if (clash) continue;
          }
          const Entry& src = child[remove_bit(m, p)];
          if (!src.ok) continue;
          std::int64_t value = src.value;
          VBits cert = src.cert;
          if (has_v) {
            value += weights.vertex_weight(nd.vertex);
            cert.set(nd.vertex);
          }
          improve_max(tab[m], value, cert);
        }
        break;
      }
      case NodeKind::forget: {
        const auto& child = frame.table[nd.children[0]];
        const int p = position_of(ntd.nodes[nd.children[0]].bag, nd.vertex);
        for (std::uint32_t m = 0; m < tab.size(); ++m)
          for (int bit = 0; bit < 2; ++bit) {
            const Entry& src = child[insert_bit(m, p, bit)];
            if (src.ok) improve_max(tab[m], src.value, src.cert);
          }
        break;
      }
      case NodeKind::join: {
        const auto& left = frame.table[nd.children[0]];
        const auto& right = frame.table[nd.children[1]];
        for (std::uint32_t m = 0; m < tab.size(); ++m) {
          if (!left[m].ok || !right[m].ok) continue;
          std::int64_t overlap = 0;
          for (int q = 0; q < b; ++q)
            if ((m >> q) & 1) overlap += weights.vertex_weight(nd.bag[q]);
          VBits cert = left[m].cert;
          cert |= right[m].cert;
          improve_max(tab[m], left[m].value + right[m].value - overlap, cert);
        }
        break;
      }
    }
  }
  return finish(ntd, frame.table[ntd.root][0], frame.entries, "wis");
}

DpSolution solve_wvc(const Graph& g, const WeightMap& weights,
                     const NiceTreeDecomposition& ntd,
                     const ForcedSets& forced) {
  check_inputs(g, ntd);
  check_weight_range(weights);
  auto [fin, fout] = forced_flags(g, forced);
  for (auto [u, v] : g.edges())
    if (fout[u] && fout[v])
      throw std::invalid_argument(
          "solve_wvc: edge with both endpoints forced out");

  SubsetTables frame;
  frame.table.resize(ntd.nodes.size());
  const int n = g.num_vertices();

  for (size_t ni = 0; ni < ntd.nodes.size(); ++ni) {
    const auto& nd = ntd.nodes[ni];
    const int b = static_cast<int>(nd.bag.size());
    auto& tab = frame.fresh(static_cast<int>(ni), 1u << b);
    switch (nd.kind) {
      case NodeKind::leaf:
        tab[0] = {0, VBits(n), true};
        break;
      case NodeKind::introduce: {
        const auto& child = frame.table[nd.children[0]];
        const int p = position_of(nd.bag, nd.vertex);
        const auto nbp = bag_neighbor_positions(g, nd.bag, nd.vertex);
        for (std::uint32_t m = 0; m < tab.size(); ++m) {
          const bool has_v = (m >> p) & 1;
          if (has_v && fout[nd.vertex]) continue;
          if (!has_v && fin[nd.vertex]) continue;
          if (!has_v) {
            // every bag edge at v must be covered by the other endpoint
            bool uncovered = false;
            for (int q : nbp)
              if (!((m >> q) & 1)) {
                uncovered = true;
                break;
              }
            if (uncovered) continue;
          }
          const Entry& src = child[remove_bit(m, p)];
          if (!src.ok) continue;
          std::int64_t value = src.value;
          VBits cert = src.cert;
          if (has_v) {
            value += weights.vertex_weight(nd.vertex);
            cert.set(nd.vertex);
          }
          improve_min(tab[m], value, cert);
        }
        break;
      }
      case NodeKind::forget: {
        const auto& child = frame.table[nd.children[0]];
        const int p = position_of(ntd.nodes[nd.children[0]].bag, nd.vertex);
        for (std::uint32_t m = 0; m < tab.size(); ++m)
          for (int bit = 0; bit < 2; ++bit) {
            const Entry& src = child[insert_bit(m, p, bit)];
            if (src.ok) improve_min(tab[m], src.value, src.cert);
          }
        break;
      }
      case NodeKind::join: {
        const auto& left = frame.table[nd.children[0]];
        const auto& right = frame.table[nd.children[1]];
        for (std::uint32_t m = 0; m < tab.size(); ++m) {
          if (!left[m].ok || !right[m].ok) continue;
          std::int64_t overlap = 0;
          for (int q = 0; q < b; ++q)
            if ((m >> q) & 1) overlap += weights.vertex_weight(nd.bag[q]);
          VBits cert = left[m].cert;
          cert |= right[m].cert;
          improve_min(tab[m], left[m].value + right[m].value - overlap, cert);
        }
        break;
      }
    }
  }
  return finish(ntd, frame.table[ntd.root][0], frame.entries, "wvc");
}

namespace {

// Dominating-set states per bag vertex: 0 = in the set, 1 = dominated,
// 2 = not dominated yet. Base-3 digit strings index the tables.
constexpr int kBlack = 0, kWhite = 1, kGrey = 2;

int ds_digit(std::uint64_t state, int p) {
  std::uint64_t d = state;
  for (int i = 0; i < p; ++i) d /= 3;
  return static_cast<int>(d % 3);
}

std::uint64_t ds_with_digit(std::uint64_t state, int p, int digit) {
  std::uint64_t pow = 1;
  for (int i = 0; i < p; ++i) pow *= 3;
  return state + (digit - ds_digit(state, p)) * pow;
}

std::uint64_t ds_remove_digit(std::uint64_t state, int p) {
  std::uint64_t pow = 1;
  for (int i = 0; i < p; ++i) pow *= 3;
  const std::uint64_t low = state % pow;
  return low + (state / (pow * 3)) * pow;
}

std::uint64_t ds_insert_digit(std::uint64_t state, int p, int digit) {
  std::uint64_t pow = 1;
  for (int i = 0; i < p; ++i) pow *= 3;
  const std::uint64_t low = state % pow;
  return low + digit * pow + (state / pow) * (pow * 3);
}

}  // namespace

DpSolution solve_ds(const Graph& g, const NiceTreeDecomposition& ntd,
                    const std::vector<int>& targets) {
  check_inputs(g, ntd);
  std::vector<char> is_target(g.num_vertices(), 0);
  for (int v : targets) {
    if (!g.has_vertex(v)) throw std::invalid_argument("solve_ds: bad target");
    is_target[v] = 1;
  }
  const int n = g.num_vertices();

  std::vector<std::vector<Entry>> table(ntd.nodes.size());
  long entries = 0;
  auto pow3 = [](int b) {
    std::uint64_t p = 1;
    for (int i = 0; i < b; ++i) p *= 3;
    return p;
  };

  for (size_t ni = 0; ni < ntd.nodes.size(); ++ni) {
    const auto& nd = ntd.nodes[ni];
    const int b = static_cast<int>(nd.bag.size());
    auto& tab = table[ni];
    tab.assign(pow3(b), Entry{});
    entries += static_cast<long>(tab.size());
    switch (nd.kind) {
      case NodeKind::leaf:
        tab[0] = {0, VBits(n), true};
        break;
      case NodeKind::introduce: {
        const auto& child = table[nd.children[0]];
        const int p = position_of(nd.bag, nd.vertex);
        const auto nbp = bag_neighbor_positions(g, nd.bag, nd.vertex);
        for (std::uint64_t m = 0; m < tab.size(); ++m) {
          const int dv = ds_digit(m, p);
          std::uint64_t cm = ds_remove_digit(m, p);
          if (dv == kBlack) {
            // v joins the set; bag neighbors marked dominated may rely on it
            for (int q : nbp) {
              const int cq = q > p ? q - 1 : q;
              if (ds_digit(m, q) == kWhite) cm = ds_with_digit(cm, cq, kGrey);
            }
            const Entry& src = child[cm];
            if (!src.ok) continue;
            VBits cert = src.cert;
            cert.set(nd.vertex);
            improve_min(tab[m], src.value + 1, cert);
          } else if (dv == kWhite) {
            bool dominated = false;
            for (int q : nbp)
              if (ds_digit(m, q) == kBlack) {
                dominated = true;
                break;
              }
            if (!dominated) continue;
            const Entry& src = child[cm];
            if (src.ok) improve_min(tab[m], src.value, src.cert);
          } else {
            const Entry& src = child[cm];
            if (src.ok) improve_min(tab[m], src.value, src.cert);
          }
        }
        break;
      }
      case NodeKind::forget: {
        const auto& child = table[nd.children[0]];
        const int p = position_of(ntd.nodes[nd.children[0]].bag, nd.vertex);
        for (std::uint64_t m = 0; m < tab.size(); ++m) {
          for (int d : {kBlack, kWhite, kGrey}) {
            if (d == kGrey && is_target[nd.vertex]) continue;
            const Entry& src = child[ds_insert_digit(m, p, d)];
            if (src.ok) improve_min(tab[m], src.value, src.cert);
          }
        }
        break;
      }
      case NodeKind::join: {
        const auto& left = table[nd.children[0]];
        const auto& right = table[nd.children[1]];
        for (std::uint64_t m = 0; m < tab.size(); ++m) {
          std::vector<int> whites;
          int blacks = 0;
          for (int q = 0; q < b; ++q) {
            const int d = ds_digit(m, q);
            if (d == kWhite) whites.push_back(q);
            if (d == kBlack) ++blacks;
          }
          // whites must be dominated on at least one side
          const int combos = 1;
          std::uint64_t total = 1;
          for (size_t i = 0; i < whites.size(); ++i) total *= 3;
          (void)combos;
          for (std::uint64_t c = 0; c < total; ++c) {
            std::uint64_t m1 = m, m2 = m, cc = c;
            for (int q : whites) {
              const int choice = static_cast<int>(cc % 3);
              cc /= 3;
              if (choice == 1) m1 = ds_with_digit(m1, q, kGrey);
              if (choice == 2) m2 = ds_with_digit(m2, q, kGrey);
            }
            if (!left[m1].ok || !right[m2].ok) continue;
            VBits cert = left[m1].cert;
            cert |= right[m2].cert;
            improve_min(tab[m], left[m1].value + right[m2].value - blacks,
                        cert);
          }
        }
        break;
      }
    }
  }
  return finish(ntd, table[ntd.root][0], entries, "ds");
}

DpSolution solve_maxcut(const Graph& g, const WeightMap& edge_weights,
                        const NiceTreeDecomposition& ntd) {
  check_inputs(g, ntd);
  check_weight_range(edge_weights);

  SubsetTables frame;
  frame.table.resize(ntd.nodes.size());
  const int n = g.num_vertices();

  for (size_t ni = 0; ni < ntd.nodes.size(); ++ni) {
    const auto& nd = ntd.nodes[ni];
    const int b = static_cast<int>(nd.bag.size());
    auto& tab = frame.fresh(static_cast<int>(ni), 1u << b);
    switch (nd.kind) {
      case NodeKind::leaf:
        tab[0] = {0, VBits(n), true};
        break;
      case NodeKind::introduce: {
        const auto& child = frame.table[nd.children[0]];
        const int p = position_of(nd.bag, nd.vertex);
        const auto nbp = bag_neighbor_positions(g, nd.bag, nd.vertex);
        for (std::uint32_t m = 0; m < tab.size(); ++m) {
          const int side = (m >> p) & 1;
          const Entry& src = child[remove_bit(m, p)];
          if (!src.ok) continue;
          std::int64_t value = src.value;
          for (int q : nbp)
            if (static_cast<int>((m >> q) & 1) != side)
              value += edge_weights.edge_weight(nd.vertex, nd.bag[q]);
          VBits cert = src.cert;
          if (side) cert.set(nd.vertex);
          improve_max(tab[m], value, cert);
        }
        break;
      }
      case NodeKind::forget: {
        const auto& child = frame.table[nd.children[0]];
        const int p = position_of(ntd.nodes[nd.children[0]].bag, nd.vertex);
        for (std::uint32_t m = 0; m < tab.size(); ++m)
          for (int bit = 0; bit < 2; ++bit) {
            const Entry& src = child[insert_bit(m, p, bit)];
            if (src.ok) improve_max(tab[m], src.value, src.cert);
          }
        break;
      }
      case NodeKind::join: {
        const auto& left = frame.table[nd.children[0]];
        const auto& right = frame.table[nd.children[1]];
        for (std::uint32_t m = 0; m < tab.size(); ++m) {
          if (!left[m].ok || !right[m].ok) continue;
          std::int64_t overlap = 0;
          for (int q = 0; q < b; ++q)
            for (int r = q + 1; r < b; ++r)
              if (g.has_edge(nd.bag[q], nd.bag[r]) &&
                  (((m >> q) ^ (m >> r)) & 1))
                overlap += edge_weights.edge_weight(nd.bag[q], nd.bag[r]);
          VBits cert = left[m].cert;
          cert |= right[m].cert;
          improve_max(tab[m], left[m].value + right[m].value - overlap, cert);
        }
        break;
      }
    }
  }
  DpSolution out =
      finish(ntd, frame.table[ntd.root][0], frame.entries, "maxcut");
  std::vector<int> sides(n, 0);
  for (int v : out.vertex_set) sides[v] = 1;
  out.assignment = std::move(sides);
  out.vertex_set.clear();
  return out;
}

namespace {

std::uint64_t q_pow(int q, int b) {
  std::uint64_t p = 1;
  for (int i = 0; i < b; ++i) p *= q;
  return p;
}

int q_digit(std::uint64_t state, int q, int p) {
  for (int i = 0; i < p; ++i) state /= q;
  return static_cast<int>(state % q);
}

std::uint64_t q_remove_digit(std::uint64_t state, int q, int p) {
  const std::uint64_t pw = q_pow(q, p);
  return state % pw + (state / (pw * q)) * pw;
}

std::uint64_t q_insert_digit(std::uint64_t state, int q, int p, int digit) {
  const std::uint64_t pw = q_pow(q, p);
  return state % pw + digit * pw + (state / pw) * (pw * q);
}

// Feasibility of a proper q-coloring over the decomposition; on success the
// coloring is rebuilt by walking the tables back from the root.
bool try_q_coloring(const Graph& g, const NiceTreeDecomposition& ntd, int q,
                    std::vector<int>& colors, long& entries) {
  std::vector<std::vector<char>> feas(ntd.nodes.size());
  std::vector<std::vector<std::int8_t>> forget_choice(ntd.nodes.size());

  for (size_t ni = 0; ni < ntd.nodes.size(); ++ni) {
    const auto& nd = ntd.nodes[ni];
    const int b = static_cast<int>(nd.bag.size());
    auto& tab = feas[ni];
    tab.assign(q_pow(q, b), 0);
    entries += static_cast<long>(tab.size());
    switch (nd.kind) {
      case NodeKind::leaf:
        tab[0] = 1;
        break;
      case NodeKind::introduce: {
        const auto& child = feas[nd.children[0]];
        const int p = position_of(nd.bag, nd.vertex);
        const auto nbp = bag_neighbor_positions(g, nd.bag, nd.vertex);
        for (std::uint64_t m = 0; m < tab.size(); ++m) {
          const int c = q_digit(m, q, p);
          bool clash = false;
          for (int nb : nbp)
            if (q_digit(m, q, nb) == c) {
              clash = true;
              break;
            }
          if (!clash && child[q_remove_digit(m, q, p)]) tab[m] = 1;
        }
        break;
      }
      case NodeKind::forget: {
        const auto& child = feas[nd.children[0]];
        const int p = position_of(ntd.nodes[nd.children[0]].bag, nd.vertex);
        forget_choice[ni].assign(tab.size(), -1);
        for (std::uint64_t m = 0; m < tab.size(); ++m)
          for (int c = 0; c < q; ++c)
            if (child[q_insert_digit(m, q, p, c)]) {
              tab[m] = 1;
              forget_choice[ni][m] = static_cast<std::int8_t>(c);
              break;
            }
        break;
      }
      case NodeKind::join: {
        const auto& left = feas[nd.children[0]];
        const auto& right = feas[nd.children[1]];
        for (std::uint64_t m = 0; m < tab.size(); ++m)
          tab[m] = left[m] && right[m];
        break;
      }
    }
  }
  if (!feas[ntd.root][0]) return false;

  colors.assign(g.num_vertices(), 0);
  std::vector<std::pair<int, std::uint64_t>> stack{{ntd.root, 0}};
  while (!stack.empty()) {
    auto [ni, m] = stack.back();
    stack.pop_back();
    const auto& nd = ntd.nodes[ni];
    switch (nd.kind) {
      case NodeKind::leaf:
        break;
      case NodeKind::introduce: {
        const int p = position_of(nd.bag, nd.vertex);
        colors[nd.vertex] = q_digit(m, q, p);
        stack.push_back({nd.children[0], q_remove_digit(m, q, p)});
        break;
      }
      case NodeKind::forget: {
        const int p = position_of(ntd.nodes[nd.children[0]].bag, nd.vertex);
        const int c = forget_choice[ni][m];
        colors[nd.vertex] = c;
        stack.push_back({nd.children[0], q_insert_digit(m, q, p, c)});
        break;
      }
      case NodeKind::join:
        stack.push_back({nd.children[0], m});
        stack.push_back({nd.children[1], m});
        break;
    }
  }
  return true;
}

}  // namespace

DpSolution chromatic_number(const Graph& g,
                            const NiceTreeDecomposition& ntd) {
  check_inputs(g, ntd);
  DpSolution out;
  out.stats.width = ntd.width();
  out.stats.nodes = static_cast<int>(ntd.nodes.size());
  if (g.num_vertices() == 0) {
    out.value = 0;
    return out;
  }
  const int qmax = std::max(1, ntd.width() + 1);
  long entries = 0;
  for (int q = 1; q <= qmax; ++q) {
    std::vector<int> colors;
    if (try_q_coloring(g, ntd, q, colors, entries)) {
      out.value = q;
      out.assignment = std::move(colors);
      out.stats.table_entries = entries;
      return out;
    }
  }
  throw std::logic_error("chromatic_number: no coloring up to width+1");
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : s) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

bool dominates(const Graph& g, const std::vector<int>& s,
               const std::vector<int>& targets) {
  std::vector<char> dom(g.num_vertices(), 0);
  for (int v : s) {
    dom[v] = 1;
    for (int u : g.neighbors(v)) dom[u] = 1;
  }
  for (int t : targets)
    if (!dom[t]) return false;
  return true;
}

std::int64_t cut_value(const Graph& g, const WeightMap& edge_weights,
                       const std::vector<int>& sides) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges())
    if (sides[u] != sides[v]) total += edge_weights.edge_weight(u, v);
  return total;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.num_vertices()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

std::int64_t set_weight(const WeightMap& weights, const std::vector<int>& s) {
  std::int64_t total = 0;
  for (int v : s) total += weights.vertex_weight(v);
  return total;
}

NiceTreeDecomposition nice_decomposition(const Graph& g) {
  return make_nice(heuristic_decompose(g, EliminationStrategy::min_degree));
}

}  // namespace mopt
