#include "planarcanon/rotation.hpp"

#include <algorithm>
#include <deque>

namespace planarcanon {

namespace {

int neighbor_index(const Graph& g, int a, int b) {
  auto nbrs = g.neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return -1;
  return static_cast<int>(it - nbrs.begin());
}

}  // namespace

RotationSystem::RotationSystem(
    Graph g, std::vector<std::vector<std::pair<int, int>>> succ_pairs)
    : g_(std::move(g)) {
  const int n = g_.vertex_count();
  if (static_cast<int>(succ_pairs.size()) != n) {
    shape_error_ = RotationViolation{-1, "successor map size mismatch"};
    return;
  }
  succ_idx_.assign(n, {});
  for (int a = 0; a < n && !shape_error_; ++a) {
    const int deg = g_.degree(a);
    succ_idx_[a].assign(deg, -1);
    std::vector<char> used(deg, 0);
    if (static_cast<int>(succ_pairs[a].size()) != deg) {
      shape_error_ = RotationViolation{a, "successor not defined on exactly Gamma(a)"};
      break;
    }
    for (auto [b, c] : succ_pairs[a]) {
      int bi = neighbor_index(g_, a, b);
      int ci = neighbor_index(g_, a, c);
      if (bi < 0 || ci < 0) {
        shape_error_ = RotationViolation{a, "successor mentions a non-neighbor"};
        break;
      }
      if (succ_idx_[a][bi] != -1) {
        shape_error_ = RotationViolation{a, "successor defined twice for a neighbor"};
        break;
      }
      if (used[ci]) {
        shape_error_ = RotationViolation{a, "successor is not injective"};
        break;
      }
      succ_idx_[a][bi] = ci;
      used[ci] = 1;
    }
  }
  if (shape_error_) succ_idx_.clear();
}

RotationSystem RotationSystem::from_cycles(
    Graph g, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::vector<std::pair<int, int>>> pairs(cycles.size());
  for (size_t a = 0; a < cycles.size(); ++a) {
    const auto& cyc = cycles[a];
    for (size_t i = 0; i < cyc.size(); ++i)
      pairs[a].emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  return RotationSystem(std::move(g), std::move(pairs));
}

void RotationSystem::require_shape() const {
  if (!shape_ok())
    fail(ErrorCode::InvalidRotation,
         "malformed rotation system: " + (shape_error_ ? shape_error_->reason : ""));
}

int RotationSystem::succ(int a, int b) const {
  require_shape();
  int bi = neighbor_index(g_, a, b);
  if (bi < 0) fail(ErrorCode::VertexOutOfRange, "succ: not a neighbor");
  return g_.neighbors(a)[succ_idx_[a][bi]];
}

int RotationSystem::pred(int a, int b) const {
  require_shape();
  int bi = neighbor_index(g_, a, b);
  if (bi < 0) fail(ErrorCode::VertexOutOfRange, "pred: not a neighbor");
  for (int i = 0; i < g_.degree(a); ++i)
    if (succ_idx_[a][i] == bi) return g_.neighbors(a)[i];
  fail(ErrorCode::InvalidRotation, "pred: successor map not surjective");
}

std::vector<int> RotationSystem::cycle_from(int a, int start) const {
  require_shape();
  std::vector<int> out;
  int cur = start;
  for (int i = 0; i < g_.degree(a); ++i) {
    out.push_back(cur);
    cur = succ(a, cur);
  }
  return out;
}

bool RotationSystem::operator==(const RotationSystem& other) const {
  if (!(g_.vertex_count() == other.g_.vertex_count() &&
        g_.edges() == other.g_.edges()))
    return false;
  return succ_idx_ == other.succ_idx_ && shape_ok() && other.shape_ok();
}

std::optional<RotationViolation> validate_rotation(const RotationSystem& r) {
  if (!r.shape_ok()) return r.shape_error();
  const Graph& g = r.graph();
  for (int a = 0; a < g.vertex_count(); ++a) {
    if (g.degree(a) < 3)
      return RotationViolation{a, "vertex degree below 3"};
    // succ_a must be one cycle covering all of Gamma(a).
    int start = g.neighbors(a)[0];
    int cur = start, steps = 0;
    do {
      cur = r.succ(a, cur);
      ++steps;
    } while (cur != start && steps <= g.degree(a));
    if (steps != g.degree(a))
      return RotationViolation{a, "successor map is not a single cycle"};
  }
  return std::nullopt;
}

RotationSystem conjugate(const RotationSystem& r) {
  const Graph& g = r.graph();
  std::vector<std::vector<std::pair<int, int>>> pairs(g.vertex_count());
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b : g.neighbors(a)) pairs[a].emplace_back(r.succ(a, b), b);
  return RotationSystem(g, std::move(pairs));
}

FaceSet faces(const RotationSystem& r) {
  if (auto v = validate_rotation(r))
    fail(ErrorCode::InvalidRotation,
         "faces: invalid rotation at vertex " + std::to_string(v->vertex) +
             ": " + v->reason);
  const Graph& g = r.graph();
  if (!is_connected(g)) fail(ErrorCode::Disconnected, "faces: disconnected graph");

  // Directed edge ids: for edge (u,v), position of v in adj(u).
  std::vector<int> offset(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    offset[v + 1] = offset[v] + g.degree(v);
  auto edge_id = [&](int u, int v) {
    auto nbrs = g.neighbors(u);
    return offset[u] +
           static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), v) -
                            nbrs.begin());
  };

  std::vector<char> seen(offset.back(), 0);
  FaceSet out;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u)) {
      if (seen[edge_id(u, v)]) continue;
      std::vector<int> walk;
      int a = u, b = v;
      while (!seen[edge_id(a, b)]) {
        seen[edge_id(a, b)] = 1;
        walk.push_back(a);
        int c = r.succ(b, a);
        a = b;
        b = c;
      }
      out.walks.push_back(std::move(walk));
    }
  return out;
}

int FaceSet::total_directed_edges() const {
  int total = 0;
  for (const auto& w : walks) total += static_cast<int>(w.size());
  return total;
}

int genus_check(const RotationSystem& r) {
  const Graph& g = r.graph();
  FaceSet f = faces(r);
  return g.vertex_count() - g.edge_count() + static_cast<int>(f.walks.size());
}

LayoutSystem::LayoutSystem(Graph g,
                           std::vector<std::vector<std::array<int, 2>>> cyc,
                           std::set<std::array<int, 4>> quads)
    : g_(std::move(g)), cyc_(std::move(cyc)), quads_(std::move(quads)) {}

std::array<int, 4> LayoutSystem::canonical_quad(int b1, int a1, int a2, int b2) {
  std::array<int, 4> fwd{b1, a1, a2, b2};
  std::array<int, 4> rev{b2, a2, a1, b1};
  return std::min(fwd, rev);
}

std::array<int, 2> LayoutSystem::cyc_neighbors(int a, int b) const {
  int bi = neighbor_index(g_, a, b);
  if (bi < 0) fail(ErrorCode::VertexOutOfRange, "cyc_neighbors: not a neighbor");
  return cyc_[a][bi];
}

bool LayoutSystem::quad(int b1, int a1, int a2, int b2) const {
  return quads_.count(canonical_quad(b1, a1, a2, b2)) > 0;
}

std::optional<LayoutViolation> validate_layout(const LayoutSystem& l) {
  const Graph& g = l.graph();
  for (int a = 0; a < g.vertex_count(); ++a) {
    if (g.degree(a) < 3) return LayoutViolation{"vertex degree below 3", a};
    // cyc_a must be one undirected cycle on Gamma(a): walk it.
    int prev = g.neighbors(a)[0];
    auto nb = l.cyc_neighbors(a, prev);
    int cur = nb[0];
    int steps = 1;
    while (cur != g.neighbors(a)[0] && steps <= g.degree(a)) {
      auto cn = l.cyc_neighbors(a, cur);
      int next = (cn[0] == prev) ? cn[1] : (cn[1] == prev ? cn[0] : -1);
      if (next == -1)
        return LayoutViolation{"cyclic order is not symmetric", a};
      prev = cur;
      cur = next;
      ++steps;
    }
    if (steps != g.degree(a))
      return LayoutViolation{"cyclic order is not a single cycle", a};
  }
  // Quadruple axioms.
  for (auto [a1, a2] : g.edges()) {
    int found = 0;
    for (int b1 : g.neighbors(a1)) {
      auto n1 = l.cyc_neighbors(a1, a2);
      if (b1 != n1[0] && b1 != n1[1]) continue;
      for (int b2 : g.neighbors(a2)) {
        auto n2 = l.cyc_neighbors(a2, a1);
        if (b2 != n2[0] && b2 != n2[1]) continue;
        if (l.quad(b1, a1, a2, b2)) ++found;
      }
    }
    if (found != 2)
      return LayoutViolation{"edge does not extend to exactly two quadruples", a1};
  }
  for (const auto& q : l.quads()) {
    auto [b1, a1, a2, b2] = q;
    if (!g.has_edge(a1, a2) || !g.has_edge(b1, a1) || !g.has_edge(a2, b2))
      return LayoutViolation{"quadruple is not a path", a1};
    auto n1 = l.cyc_neighbors(a1, a2);
    auto n2 = l.cyc_neighbors(a2, a1);
    if ((b1 != n1[0] && b1 != n1[1]) || (b2 != n2[0] && b2 != n2[1]))
      return LayoutViolation{"quadruple endpoint is not a cyclic neighbor", a1};
  }
  return std::nullopt;
}

LayoutSystem layout_of(const RotationSystem& r) {
  if (auto v = validate_rotation(r))
    fail(ErrorCode::InvalidRotation, "layout_of: invalid rotation: " + v->reason);
  const Graph& g = r.graph();
  std::vector<std::vector<std::array<int, 2>>> cyc(g.vertex_count());
  for (int a = 0; a < g.vertex_count(); ++a) {
    cyc[a].reserve(g.degree(a));
    for (int b : g.neighbors(a)) {
      std::array<int, 2> nb{r.pred(a, b), r.succ(a, b)};
      std::sort(nb.begin(), nb.end());
      cyc[a].push_back(nb);
    }
  }
  std::set<std::array<int, 4>> quads;
  for (auto [u, v] : g.edges())
    for (auto [a1, a2] : {std::pair{u, v}, std::pair{v, u}}) {
      quads.insert(LayoutSystem::canonical_quad(r.pred(a1, a2), a1, a2,
                                                r.succ(a2, a1)));
      quads.insert(LayoutSystem::canonical_quad(r.succ(a1, a2), a1, a2,
                                                r.pred(a2, a1)));
    }
  return LayoutSystem(g, std::move(cyc), std::move(quads));
}

RotationsOfLayoutResult rotations_of_layout(const LayoutSystem& l) {
  if (auto v = validate_layout(l))
    fail(ErrorCode::Precondition, "rotations_of_layout: invalid layout: " + v->reason);
  const Graph& g = l.graph();
  if (!is_connected(g))
    fail(ErrorCode::Disconnected, "rotations_of_layout: disconnected graph");
  const int n = g.vertex_count();

  // succ_of[a][i]: chosen directed successor (as neighbor index), -1 unset.
  std::vector<std::vector<int>> succ_of(n);
  std::vector<char> oriented(n, 0);
  std::vector<int> bfs_parent(n, -1);

  auto orient_cycle = [&](int a, int first, int second) -> bool {
    // Direct cyc_a so that succ(first) = second; returns false if second is
    // not a cyc-neighbor of first.
    auto nb = l.cyc_neighbors(a, first);
    if (second != nb[0] && second != nb[1]) return false;
    succ_of[a].assign(g.degree(a), -1);
    int prev = first, cur = second;
    for (int i = 0; i < g.degree(a); ++i) {
      succ_of[a][neighbor_index(g, a, prev)] = neighbor_index(g, a, cur);
      auto cn = l.cyc_neighbors(a, cur);
      int next = (cn[0] == prev) ? cn[1] : cn[0];
      prev = cur;
      cur = next;
    }
    oriented[a] = 1;
    return true;
  };

  auto pred_of = [&](int a, int b) {
    int bi = neighbor_index(g, a, b);
    for (int i = 0; i < g.degree(a); ++i)
      if (succ_of[a][i] == bi) return g.neighbors(a)[i];
    return -1;
  };
  auto succ_val = [&](int a, int b) {
    return g.neighbors(a)[succ_of[a][neighbor_index(g, a, b)]];
  };

  auto path_to_seed = [&](int v) {
    std::vector<int> path;
    for (int x = v; x != -1; x = bfs_parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
  };

  {
    int a = 0;
    int first = g.neighbors(a)[0];
    auto nb = l.cyc_neighbors(a, first);
    orient_cycle(a, first, std::min(nb[0], nb[1]));
  }

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a1 = queue.front();
    queue.pop_front();
    for (int a2 : g.neighbors(a1)) {
      // The quadruple starting at pred_{a1}(a2) fixes succ_{a2}(a1).
      int beta = pred_of(a1, a2);
      auto n2 = l.cyc_neighbors(a2, a1);
      int c = -1;
      for (int cand : {n2[0], n2[1]})
        if (l.quad(beta, a1, a2, cand)) c = cand;
      if (c == -1) {
        LayoutInconsistency inc;
        inc.edge_a = a1;
        inc.edge_b = a2;
        inc.reason = "no quadruple continues the oriented edge";
        inc.path1 = path_to_seed(a1);
        inc.path2 = path_to_seed(a2);
        return inc;
      }
      if (!oriented[a2]) {
        orient_cycle(a2, a1, c);
        bfs_parent[a2] = a1;
        queue.push_back(a2);
      } else if (succ_val(a2, a1) != c) {
        LayoutInconsistency inc;
        inc.edge_a = a1;
        inc.edge_b = a2;
        inc.reason = "orientation propagation disagrees";
        inc.path1 = path_to_seed(a2);
        auto p = path_to_seed(a1);
        p.push_back(a2);
        inc.path2 = std::move(p);
        return inc;
      }
    }
  }

  std::vector<std::vector<std::pair<int, int>>> pairs(n);
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) pairs[a].emplace_back(b, succ_val(a, b));
  RotationSystem r(g, std::move(pairs));

  // A propagation-consistent assignment can still disagree with l on the
  // remaining quadruples; verify and report on the mismatching edge.
  LayoutSystem back = layout_of(r);
  if (!(back == l)) {
    for (auto [u, v] : g.edges()) {
      auto q1 = LayoutSystem::canonical_quad(r.pred(u, v), u, v, r.succ(v, u));
      auto q2 = LayoutSystem::canonical_quad(r.succ(u, v), u, v, r.pred(v, u));
      if (!l.quads().count(q1) || !l.quads().count(q2)) {
        LayoutInconsistency inc;
        inc.edge_a = u;
        inc.edge_b = v;
        inc.reason = "layout is not realizable by any rotation system";
        inc.path1 = path_to_seed(u);
        inc.path2 = path_to_seed(v);
        return inc;
      }
    }
    LayoutInconsistency inc;
    inc.reason = "layout differs from the reconstruction";
    return inc;
  }

  return RotationPair{r, conjugate(r)};
}

RotationSystem relabel(const RotationSystem& r, const std::vector<int>& perm) {
  const Graph& g = r.graph();
  Graph h = relabel(g, perm);
  std::vector<std::vector<std::pair<int, int>>> pairs(g.vertex_count());
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b : g.neighbors(a))
      pairs[perm[a]].emplace_back(perm[b], perm[r.succ(a, b)]);
  return RotationSystem(std::move(h), std::move(pairs));
}

}  // namespace planarcanon
