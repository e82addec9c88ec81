#include "planarcanon/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace planarcanon {

Graph::Graph(int n) {
  if (n < 0) fail(ErrorCode::ParseError, "negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    fail(ErrorCode::VertexOutOfRange,
         "vertex id " + std::to_string(v) + " out of range");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorCode::ParseError, "self-loop at " + std::to_string(u));
  if (has_edge(u, v))
    fail(ErrorCode::ParseError,
         "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void PathSeq::validate_in(const Graph& g) const {
  if (verts.empty()) fail(ErrorCode::Precondition, "empty path");
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::Precondition, "path repeats a vertex");
  for (size_t i = 0; i + 1 < verts.size(); ++i)
    if (!g.has_edge(verts[i], verts[i + 1]))
      fail(ErrorCode::Precondition, "non-adjacent consecutive path vertices");
}

std::vector<Dist> bfs_distances(const Graph& g, int src) {
  g.check_vertex(src);
  std::vector<Dist> dist(g.vertex_count(), kInfDist);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (dist[w] == kInfDist) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

Dist distance(const Graph& g, int u, int v) {
  g.check_vertex(v);
  return bfs_distances(g, u)[v];
}

std::vector<Dist> bfs_distances_avoiding(const Graph& g,
                                         const std::vector<int>& avoid,
                                         int src) {
  g.check_vertex(src);
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int v : avoid) {
    g.check_vertex(v);
    blocked[v] = 1;
  }
  std::vector<Dist> dist(g.vertex_count(), kInfDist);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v != src && blocked[v]) continue;  // may end a path, not continue one
    for (int w : g.neighbors(v))
      if (dist[w] == kInfDist) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

std::vector<PathSeq> all_geodesics_avoiding(const Graph& g,
                                            const std::vector<int>& avoid,
                                            int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return {PathSeq{{u}}};
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int w : avoid) blocked[w] = 1;
  const std::vector<Dist> dist = bfs_distances_avoiding(g, avoid, u);
  if (dist[v] == kInfDist) return {};

  // Backward walk over the geodesic DAG from v; a predecessor must be
  // expandable (u itself or outside the avoided set).
  std::vector<PathSeq> out;
  std::vector<int> stack{v};
  auto extend = [&](auto&& self) -> void {
    int cur = stack.back();
    if (cur == u) {
      PathSeq p;
      p.verts.assign(stack.rbegin(), stack.rend());
      out.push_back(std::move(p));
      return;
    }
    for (int w : g.neighbors(cur)) {
      if (dist[w] + 1 != dist[cur]) continue;
      if (w != u && blocked[w]) continue;
      stack.push_back(w);
      self(self);
      stack.pop_back();
    }
  };
  extend(extend);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), is_finite);
}

bool is_connected_within(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty()) return true;
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : verts) in[v] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> q{verts[0]};
  seen[verts[0]] = 1;
  int found = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++found;
    for (int w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  return found == static_cast<int>(verts.size());
}

namespace {

// Unit-capacity vertex-split flow. Nodes 2v (in) and 2v+1 (out).
struct SplitFlow {
  int n;
  std::vector<std::vector<int>> to;    // adjacency into edge ids
  std::vector<int> head, cap;

  explicit SplitFlow(const Graph& g) : n(2 * g.vertex_count()), to(n) {
    for (int v = 0; v < g.vertex_count(); ++v) add(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add(2 * u + 1, 2 * v, 1);
      add(2 * v + 1, 2 * u, 1);
    }
  }
  void add(int a, int b, int c) {
    to[a].push_back(static_cast<int>(head.size()));
    head.push_back(b);
    cap.push_back(c);
    to[b].push_back(static_cast<int>(head.size()));
    head.push_back(a);
    cap.push_back(0);
  }
  bool augment(int s, int t) {
    std::vector<int> pre(n, -1);
    std::deque<int> q{s};
    pre[s] = -2;
    while (!q.empty() && pre[t] == -1) {
      int a = q.front();
      q.pop_front();
      for (int e : to[a])
        if (cap[e] > 0 && pre[head[e]] == -1) {
          pre[head[e]] = e;
          q.push_back(head[e]);
        }
    }
    if (pre[t] == -1) return false;
    for (int v = t; v != s;) {
      int e = pre[v];
      --cap[e];
      ++cap[e ^ 1];
      v = head[e ^ 1];
    }
    return true;
  }
};

}  // namespace

int vertex_disjoint_paths(const Graph& g, int u, int v, int cap) {
  SplitFlow f(g);
  f.cap[2 * (2 * u)] = cap + 1;  // source/sink vertices are not capacity-limited
  f.cap[2 * (2 * v)] = cap + 1;
  int flow = 0;
  while (flow < cap && f.augment(2 * u + 1, 2 * v)) ++flow;
  return flow;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) fail(ErrorCode::Precondition, "k must be >= 1");
  const int n = g.vertex_count();
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  bool complete = (g.edge_count() == n * (n - 1) / 2);
  if (complete) return n - 1 >= k;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (vertex_disjoint_paths(g, u, v, k) < k) return false;
    }
  return true;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> num, low;
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> block_edges;
  std::vector<char> is_cut;
  int counter = 0;

  explicit BlockFinder(const Graph& gr)
      : g(gr),
        num(gr.vertex_count(), -1),
        low(gr.vertex_count(), 0),
        is_cut(gr.vertex_count(), 0) {}

  void pop_block(std::pair<int, int> upto) {
    std::vector<std::pair<int, int>> es;
    for (;;) {
      auto e = estack.back();
      estack.pop_back();
      es.push_back(e);
      if (e == upto) break;
    }
    block_edges.push_back(std::move(es));
  }

  void run(int root) {
    // Iterative DFS; state per frame: vertex, parent, neighbor index.
    struct Frame { int v, parent; size_t i; };
    std::vector<Frame> st{{root, -1, 0}};
    num[root] = low[root] = counter++;
    while (!st.empty()) {
      auto& f = st.back();
      auto nbrs = g.neighbors(f.v);
      if (f.i < nbrs.size()) {
        int w = nbrs[f.i++];
        if (w == f.parent) continue;
        if (num[w] == -1) {
          estack.emplace_back(f.v, w);
          num[w] = low[w] = counter++;
          st.push_back({w, f.v, 0});
        } else if (num[w] < num[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v, parent = f.parent;
        st.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= num[parent]) {
            if (parent != root) is_cut[parent] = 1;
            pop_block({parent, v});
          }
        }
      }
    }
    // Root is a cutpoint iff it lies in two or more blocks.
    int containing = 0;
    for (auto& es : block_edges)
      for (auto& e : es)
        if (e.first == root) {
          ++containing;
          break;
        }
    if (containing >= 2) is_cut[root] = 1;
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) fail(ErrorCode::Precondition, "empty graph");
  if (!is_connected(g)) fail(ErrorCode::Disconnected, "graph is disconnected");
  BlockDecomposition out;
  if (g.edge_count() == 0) {
    out.blocks = {{0}};
    out.block_tree = std::vector<std::pair<int, int>>{};
    return out;
  }
  BlockFinder bf(g);
  bf.run(0);

  for (auto& es : bf.block_edges) {
    std::vector<int> verts;
    for (auto [a, b] : es) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.blocks.push_back(std::move(verts));
  }
  for (int v = 0; v < n; ++v)
    if (bf.is_cut[v]) out.cutpoints.push_back(v);

  // Block tree exists only for simple cut-block relation.
  std::vector<std::vector<int>> blocks_of(n);
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : out.blocks[b])
      if (bf.is_cut[v]) blocks_of[v].push_back(static_cast<int>(b));
  bool simple = true;
  for (int c : out.cutpoints)
    if (blocks_of[c].size() > 2) simple = false;
  if (simple) {
    std::vector<std::pair<int, int>> tree;
    for (int c : out.cutpoints)
      if (blocks_of[c].size() == 2)
        tree.emplace_back(blocks_of[c][0], blocks_of[c][1]);
    std::sort(tree.begin(), tree.end());
    out.block_tree = std::move(tree);
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    fail(ErrorCode::Precondition, "permutation size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* new_to_old) {
  std::vector<int> vs = verts;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> idx(g.vertex_count(), -1);
  for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (int w : g.neighbors(vs[i]))
      if (idx[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), idx[w]);
  if (new_to_old) *new_to_old = vs;
  return out;
}

}  // namespace planarcanon
