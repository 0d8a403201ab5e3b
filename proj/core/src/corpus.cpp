#include "mopt/corpus.hpp"

#include <algorithm>

namespace mopt {

namespace {

// Glue g2 onto g1: shared[i] identifies g2 vertex shared_src[i] with a g1
// vertex; remaining g2 vertices get fresh ids.
Graph glue(const Graph& g1, const Graph& g2,
           const std::vector<std::pair<int, int>>& shared,  // (g2 id, g1 id)
           std::vector<int>* g2_image) {
  std::vector<int> image(g2.num_vertices(), -1);
  for (auto [b, a] : shared) image[b] = a;
  int next = g1.num_vertices();
  for (int v = 0; v < g2.num_vertices(); ++v)
    if (image[v] < 0) image[v] = next++;
  Graph g(next);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(image[u], image[v]);
  if (g2_image) *g2_image = image;
  return g;
}

std::vector<int> all_vertices(const Graph& g, const std::vector<int>& image) {
  std::vector<int> out;
  out.reserve(image.size());
  for (int v : image) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (int r = 2; r <= 6; ++r)
    out.push_back({"grid-" + std::to_string(r) + "x" + std::to_string(r),
                   make_grid(r, r), true, true});
  for (int i = 0; i < 6; ++i) {
    Graph g = make_random_subgrid(4, 4, 0.75, seed * 977 + i);
    const bool bip = is_bipartite(g);
    out.push_back({"subgrid-" + std::to_string(i), std::move(g), true, bip});
  }
  for (int n = 3; n <= 10; ++n)
    out.push_back({"cycle-" + std::to_string(n), make_cycle(n), true,
                   n % 2 == 0});
  for (int b = 3; b <= 6; ++b)
    out.push_back({"star-" + std::to_string(b), make_complete_bipartite(1, b),
                   true, true});
  for (int n = 2; n <= 6; ++n)
    out.push_back({"complete-" + std::to_string(n), make_complete(n), n <= 4,
                   n == 2});
  for (int i = 0; i < 6; ++i) {
    const int a = 2 + static_cast<int>((seed + i) % 3);      // 2..4
    const int b = 2 + static_cast<int>((seed + 2 * i) % 4);  // 2..5
    Graph g = make_random_bipartite(a, b, 0.5, seed * 1543 + i);
    out.push_back({"bip-" + std::to_string(i), std::move(g),
                   a <= 2 || b <= 2, true});
  }
  return out;
}

std::vector<CompositeEntry> composite_corpus(std::uint64_t seed) {
  std::vector<CompositeEntry> out;

  {
    // two triangles sharing a vertex
    std::vector<int> img;
    Graph g = glue(make_complete(3), make_complete(3), {{0, 0}}, &img);
    PieceDecomposition pd;
    pd.pieces.push_back({{0, 1, 2}, PieceKind::bounded_treewidth});
    pd.pieces.push_back({all_vertices(g, img), PieceKind::bounded_treewidth});
    pd.boundary = {0};
    out.push_back({"bowtie", std::move(g), std::move(pd)});
  }
  {
    // C4 (bipartite piece) with a triangle hanging off one vertex
    std::vector<int> img;
    Graph g = glue(make_cycle(4), make_complete(3), {{0, 0}}, &img);
    PieceDecomposition pd;
    pd.pieces.push_back({{0, 1, 2, 3}, PieceKind::bipartite});
    pd.pieces.push_back({all_vertices(g, img), PieceKind::bounded_treewidth});
    pd.boundary = {0};
    out.push_back({"c4-triangle", std::move(g), std::move(pd)});
  }
  {
    // 2x3 grid glued to K4 at one corner
    std::vector<int> img;
    Graph g = glue(make_grid(2, 3), make_complete(4), {{0, 5}}, &img);
    PieceDecomposition pd;
    pd.pieces.push_back({{0, 1, 2, 3, 4, 5}, PieceKind::bipartite});
    pd.pieces.push_back({all_vertices(g, img), PieceKind::bounded_treewidth});
    pd.boundary = {5};
    out.push_back({"grid-k4", std::move(g), std::move(pd)});
  }
  {
    // two complete bipartite blocks sharing two vertices
    std::vector<int> img;
    Graph g = glue(make_complete_bipartite(2, 3), make_complete_bipartite(2, 2),
                   {{0, 0}, {2, 2}}, &img);
    PieceDecomposition pd;
    pd.pieces.push_back({{0, 1, 2, 3, 4}, PieceKind::bipartite});
    pd.pieces.push_back({all_vertices(g, img), PieceKind::bipartite});
    pd.boundary = {0, 2};
    out.push_back({"bip-bip", std::move(g), std::move(pd)});
  }
  for (int i = 0; i < 4; ++i) {
    // random bipartite block glued to C5 at two cycle vertices
    Graph bip = make_random_bipartite(3, 3, 0.6, seed * 2311 + i);
    std::vector<int> img;
    Graph g = glue(make_cycle(5), bip, {{0, 0}, {3, 2}}, &img);
    PieceDecomposition pd;
    pd.pieces.push_back({{0, 1, 2, 3, 4}, PieceKind::bounded_treewidth});
    pd.pieces.push_back({all_vertices(g, img), PieceKind::bipartite});
    pd.boundary = {0, 2};
    out.push_back(
        {"cycle-bip-" + std::to_string(i), std::move(g), std::move(pd)});
  }
  return out;
}

}  // namespace mopt
