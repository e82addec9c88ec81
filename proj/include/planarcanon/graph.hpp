#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planarcanon/common.hpp"

namespace planarcanon {

// Simple undirected graph on dense vertex ids 0..n-1. No self-loops, no
// parallel edges; neighbor lists are kept sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  std::span<const int> neighbors(int v) const;

  // Edges as (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

  void check_vertex(int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Sequence of pairwise distinct vertices, consecutive ones adjacent in the
// host graph. length() counts edges.
struct PathSeq {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()) - 1; }
  bool operator==(const PathSeq&) const = default;
  // Throws if the sequence is not a valid path of g.
  void validate_in(const Graph& g) const;
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
  std::vector<int> cutpoints;            // sorted
  // Adjacency among block indices; present only when every cutpoint lies in
  // at most two blocks (simple cut-block relation).
  std::optional<std::vector<std::pair<int, int>>> block_tree;
};

Dist distance(const Graph& g, int u, int v);
std::vector<Dist> bfs_distances(const Graph& g, int src);

// Distances of paths whose inner vertices avoid X (endpoints readmitted):
// expansion is allowed from src and from any vertex outside X.
std::vector<Dist> bfs_distances_avoiding(const Graph& g,
                                         const std::vector<int>& avoid,
                                         int src);

// Complete set of minimum-length u-v paths with no inner vertex in `avoid`.
// Exponential in the worst case; this is the enumeration oracle used at
// small n.
std::vector<PathSeq> all_geodesics_avoiding(const Graph& g,
                                            const std::vector<int>& avoid,
                                            int u, int v);

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, const std::vector<int>& verts);

// True iff n >= k+1 and no deletion of <= k-1 vertices disconnects g.
// Uses vertex-disjoint path counts (unit-capacity flow); the brute-force
// deletion check lives in oracle.hpp as the independent test oracle.
bool is_k_connected(const Graph& g, int k);

// Max number of internally vertex-disjoint u-v paths, capped at `cap`.
int vertex_disjoint_paths(const Graph& g, int u, int v, int cap);

BlockDecomposition block_decomposition(const Graph& g);

// perm[old] = new id; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* new_to_old = nullptr);

}  // namespace planarcanon
