#include "planarcanon/corpus.hpp"

#include <array>
#include <random>

namespace planarcanon {

namespace {

Graph wheel(int p) {
  if (p < 3) fail(ErrorCode::Precondition, "wheel needs rim length >= 3");
  Graph g(p + 1);
  for (int i = 0; i < p; ++i) {
    g.add_edge(i, (i + 1) % p);
    g.add_edge(i, p);
  }
  return g;
}

Graph prism(int p) {
  if (p < 3) fail(ErrorCode::Precondition, "prism needs p >= 3");
  Graph g(2 * p);
  for (int i = 0; i < p; ++i) {
    g.add_edge(i, (i + 1) % p);
    g.add_edge(p + i, p + (i + 1) % p);
    g.add_edge(i, p + i);
  }
  return g;
}

Graph antiprism(int p) {
  if (p < 3) fail(ErrorCode::Precondition, "antiprism needs p >= 3");
  Graph g(2 * p);
  for (int i = 0; i < p; ++i) {
    g.add_edge(i, (i + 1) % p);
    g.add_edge(p + i, p + (i + 1) % p);
    g.add_edge(i, p + i);
    g.add_edge((i + 1) % p, p + i);
  }
  return g;
}

Graph platonic(const std::string& name) {
  if (name == "tetra") {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "cube") {
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                 {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                 {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  }
  if (name == "octa") return antiprism(3);
  if (name == "icosa") {
    // Gyroelongated pentagonal bipyramid: two apexes and a pentagonal
    // antiprism band.
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(5 + i, 5 + (i + 1) % 5);
      g.add_edge(i, 5 + i);
      g.add_edge((i + 1) % 5, 5 + i);
      g.add_edge(10, i);
      g.add_edge(11, 5 + i);
    }
    return g;
  }
  if (name == "dodeca") {
    return Graph::from_edges(
        20, {{0, 1},  {1, 2},  {2, 3},  {3, 4},  {4, 0},   // inner pentagon
             {0, 5},  {1, 6},  {2, 7},  {3, 8},  {4, 9},   // spokes out
             {5, 10}, {10, 6}, {6, 11}, {11, 7}, {7, 12},  // decagon ring
             {12, 8}, {8, 13}, {13, 9}, {9, 14}, {14, 5},
             {10, 16}, {11, 17}, {12, 18}, {13, 19}, {14, 15},  // spokes out
             {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 15}});  // outer pentagon
  }
  fail(ErrorCode::Precondition, "unknown platonic solid: " + name);
}

Graph stacked_triangulation(int splits, std::uint32_t seed) {
  if (splits < 0) fail(ErrorCode::Precondition, "negative split count");
  std::mt19937 rng(seed);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int n = 4;
  for (int s = 0; s < splits; ++s) {
    const std::uint32_t idx = rng_below(rng, static_cast<std::uint32_t>(faces.size()));
    auto f = faces[idx];
    const int nv = n++;
    faces[idx] = {f[0], f[1], nv};
    faces.push_back({f[0], f[2], nv});
    faces.push_back({f[1], f[2], nv});
    for (int c : f) edges.emplace_back(c, nv);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate(const std::string& family, int param, std::uint32_t seed) {
  if (family == "wheel") return wheel(param);
  if (family == "prism") return prism(param);
  if (family == "antiprism") return antiprism(param);
  if (family == "tetra" || family == "cube" || family == "octa" ||
      family == "dodeca" || family == "icosa")
    return platonic(family);
  if (family == "stacked-triangulation") return stacked_triangulation(param, seed);
  fail(ErrorCode::Precondition, "unknown family: " + family);
}

std::vector<const CorpusEntry*> Corpus::with_max_n(int nmax) const {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : entries)
    if (e.graph.vertex_count() <= nmax) out.push_back(&e);
  return out;
}

Corpus default_corpus(int nmax, std::uint32_t seed) {
  Corpus c;
  auto add = [&](const std::string& family, int param, std::uint32_t s) {
    Graph g = generate(family, param, s);
    if (g.vertex_count() > nmax) return;
    std::string name = family;
    if (param > 0) name += "-" + std::to_string(param);
    if (family == "stacked-triangulation") name += "-s" + std::to_string(s);
    c.entries.push_back({name, family, param, s, std::move(g)});
  };
  for (const char* p : {"tetra", "cube", "octa", "dodeca", "icosa"}) add(p, 0, 0);
  for (int p = 3; p <= 9; ++p) add("wheel", p, 0);
  for (int p = 3; p <= 5; ++p) add("prism", p, 0);
  for (int p = 3; p <= 4; ++p) add("antiprism", p, 0);
  for (int s = 1; s <= 6; ++s)
    for (std::uint32_t k = 0; k < 3; ++k)
      add("stacked-triangulation", s, seed + k);
  return c;
}

std::vector<int> random_permutation(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace planarcanon
