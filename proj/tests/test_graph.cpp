#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "planarcanon/corpus.hpp"
#include "planarcanon/graph.hpp"
#include "planarcanon/oracle.hpp"

using namespace planarcanon;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph k4() { return generate("tetra", 0, 0); }

Graph random_graph(int n, double p_percent, std::uint32_t seed) {
  std::mt19937 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng_below(rng, 100) < p_percent) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("distance basics") {
  Graph c6 = cycle_graph(6);
  CHECK(distance(c6, 0, 3) == 3);
  CHECK(distance(c6, 2, 2) == 0);

  Graph two_triangles(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})
    two_triangles.add_edge(u, v);
  CHECK(distance(two_triangles, 0, 4) == kInfDist);
  CHECK(kInfDist > 1000000);

  CHECK_THROWS_AS(distance(c6, 0, 6), Error);
}

TEST_CASE("all_geodesics_avoiding on the six-cycle") {
  Graph c6 = cycle_graph(6);
  auto both = all_geodesics_avoiding(c6, {}, 0, 3);
  REQUIRE(both.size() == 2);
  std::set<std::vector<int>> got{both[0].verts, both[1].verts};
  std::set<std::vector<int>> want{{0, 1, 2, 3}, {0, 5, 4, 3}};
  CHECK(got == want);

  auto one = all_geodesics_avoiding(c6, {1}, 0, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].verts == std::vector<int>{0, 5, 4, 3});
}

TEST_CASE("all_geodesics_avoiding ignores endpoints in the avoided set") {
  Graph g = k4();
  auto direct = all_geodesics_avoiding(g, {2, 3}, 0, 1);
  REQUIRE(direct.size() == 1);
  CHECK(direct[0].verts == std::vector<int>{0, 1});
}

TEST_CASE("geodesic enumeration properties") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    Graph g = random_graph(8, 45, seed);
    std::vector<int> avoid{1, 2};
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) {
        auto d = bfs_distances_avoiding(g, avoid, u)[v];
        auto geos = all_geodesics_avoiding(g, avoid, u, v);
        if (!is_finite(d)) {
          CHECK(geos.empty());
          continue;
        }
        REQUIRE(!geos.empty());
        for (const auto& p : geos) {
          CHECK(p.length() == d);
          p.validate_in(g);
          for (size_t i = 1; i + 1 < p.verts.size(); ++i) {
            CHECK(p.verts[i] != 1);
            CHECK(p.verts[i] != 2);
          }
        }
      }
  }
}

TEST_CASE("unavoided geodesics realize plain distances") {
  Graph g = generate("icosa", 0, 0);
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_distances(g, u);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (const auto& p : all_geodesics_avoiding(g, {}, u, v))
        CHECK(p.length() == dist[v]);
  }
}

TEST_CASE("distance is a metric on connected components") {
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    Graph g = random_graph(7 + seed % 3, 40, seed);
    const int n = g.vertex_count();
    std::vector<std::vector<Dist>> d;
    for (int v = 0; v < n; ++v) d.push_back(bfs_distances(g, v));
    for (int a = 0; a < n; ++a) {
      CHECK(d[a][a] == 0);
      for (int b = 0; b < n; ++b) {
        CHECK(d[a][b] == d[b][a]);
        for (int c = 0; c < n; ++c)
          if (is_finite(d[a][b]) && is_finite(d[b][c]))
            CHECK(d[a][c] <= d[a][b] + d[b][c]);
      }
    }
  }
}

TEST_CASE("is_k_connected on named graphs") {
  CHECK(is_k_connected(k4(), 3));
  CHECK_FALSE(is_k_connected(cycle_graph(5), 3));
  CHECK(is_k_connected(cycle_graph(5), 2));

  Graph prism = generate("prism", 3, 0);
  const bool oracle = brute_force_k_connected(prism, 3);
  CHECK(oracle);  // derived via deletion of every 1- and 2-subset
  CHECK(is_k_connected(prism, 3) == oracle);
}

TEST_CASE("is_k_connected agrees with the deletion oracle") {
  for (std::uint32_t seed = 1; seed <= 12; ++seed) {
    Graph g = random_graph(4 + seed % 6, 55, seed * 13);
    for (int k = 1; k <= 4; ++k)
      CHECK(is_k_connected(g, k) == brute_force_k_connected(g, k));
  }
  for (const char* fam : {"tetra", "octa", "cube"}) {
    Graph g = generate(fam, 0, 0);
    for (int k = 1; k <= 4; ++k)
      CHECK(is_k_connected(g, k) == brute_force_k_connected(g, k));
  }
}

TEST_CASE("block decomposition of small shapes") {
  // Two triangles sharing one vertex.
  Graph bowtie(5);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})
    bowtie.add_edge(u, v);
  auto bd = block_decomposition(bowtie);
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.cutpoints == std::vector<int>{2});
  REQUIRE(bd.block_tree.has_value());
  CHECK(bd.block_tree->size() == 1);

  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  auto pd = block_decomposition(p4);
  CHECK(pd.blocks.size() == 3);
  CHECK(pd.cutpoints == std::vector<int>{1, 2});
  REQUIRE(pd.block_tree.has_value());
  CHECK(pd.block_tree->size() == 2);

  auto cd = block_decomposition(cycle_graph(6));
  CHECK(cd.blocks.size() == 1);
  CHECK(cd.cutpoints.empty());

  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK_THROWS_AS(block_decomposition(disconnected), Error);
}

TEST_CASE("blocks cover edges exactly once and cutpoints match deletion") {
  for (std::uint32_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_graph(9, 30, seed * 7);
    if (!is_connected(g)) continue;
    auto bd = block_decomposition(g);
    std::set<std::pair<int, int>> covered;
    long count = 0;
    for (const auto& block : bd.blocks) {
      std::set<int> in(block.begin(), block.end());
      for (auto [u, v] : g.edges())
        if (in.count(u) && in.count(v)) {
          ++count;
          covered.insert({u, v});
        }
    }
    CHECK(static_cast<int>(covered.size()) == g.edge_count());
    CHECK(count == g.edge_count());  // no edge in two blocks
    CHECK(bd.cutpoints == brute_force_cutpoints(g));
  }
}

TEST_CASE("graph parse errors") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), Error);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
}
