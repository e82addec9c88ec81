#include "planarcanon/coords.hpp"

#include <algorithm>

#include "planarcanon/embed.hpp"

namespace planarcanon {

int local_coord(const RotationSystem& r, int x, int y, int z) {
  const Graph& g = r.graph();
  if (!g.has_edge(x, y) || !g.has_edge(x, z))
    fail(ErrorCode::VertexOutOfRange, "local_coord: y and z must neighbor x");
  int cur = y;
  for (int i = 0; i < g.degree(x); ++i) {
    if (cur == z) return i;
    cur = r.succ(x, cur);
  }
  fail(ErrorCode::InvalidRotation, "local_coord: z not on the cycle at x");
}

CoordinateCode global_coords(const RotationSystem& r, int a, int b) {
  const Graph& g = r.graph();
  if (!g.has_edge(a, b))
    fail(ErrorCode::Precondition, "global_coords: origin must be an edge");
  const auto dist = bfs_distances(g, a);
  for (Dist d : dist)
    if (!is_finite(d))
      fail(ErrorCode::Disconnected, "global_coords: disconnected graph");

  const int n = g.vertex_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return dist[u] < dist[v]; });

  CoordinateCode out;
  out.origin_a = a;
  out.origin_b = b;
  out.coord.assign(n, {});
  // prev[v] = predecessor of v on its extreme-left path; prev[a] = b by the
  // origin convention (the first step coordinate counts from b).
  std::vector<int> prev(n, -1);
  prev[a] = b;

  for (int v : order) {
    if (v == a) continue;
    bool have = false;
    std::vector<int> best;
    int best_parent = -1;
    for (int u : g.neighbors(v)) {
      if (dist[u] + 1 != dist[v]) continue;
      std::vector<int> cand = out.coord[u];
      cand.push_back(local_coord(r, u, prev[u], v));
      if (!have || cand < best) {
        have = true;
        best = std::move(cand);
        best_parent = u;
      }
    }
    if (!have) fail(ErrorCode::Internal, "BFS layer without a parent");
    out.coord[v] = std::move(best);
    prev[v] = best_parent;
  }
  return out;
}

PathSeq decode_coordinate_path(const RotationSystem& r, int a, int b,
                               const std::vector<int>& code) {
  PathSeq p;
  p.verts.push_back(a);
  int prev = b, cur = a;
  for (int c : code) {
    int step = prev;
    for (int i = 0; i < c; ++i) step = r.succ(cur, step);
    p.verts.push_back(step);
    prev = cur;
    cur = step;
  }
  return p;
}

namespace {

void append_nat(std::vector<std::uint8_t>& out, std::uint64_t value) {
  std::uint8_t buf[8];
  int len = 0;
  while (value > 0) {
    buf[len++] = static_cast<std::uint8_t>(value & 0xff);
    value >>= 8;
  }
  out.push_back(static_cast<std::uint8_t>(len));
  for (int i = len - 1; i >= 0; --i) out.push_back(buf[i]);  // big-endian
}

std::vector<std::uint8_t> serialize_reindexed(const RotationSystem& r,
                                              const std::vector<int>& new_id) {
  const Graph& g = r.graph();
  const int n = g.vertex_count();
  std::vector<int> old_id(n);
  for (int v = 0; v < n; ++v) old_id[new_id[v]] = v;

  std::vector<std::uint8_t> bytes;
  append_nat(bytes, static_cast<std::uint64_t>(n));
  append_nat(bytes, static_cast<std::uint64_t>(g.edge_count()));
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    int nu = new_id[u], nv = new_id[v];
    es.emplace_back(std::min(nu, nv), std::max(nu, nv));
  }
  std::sort(es.begin(), es.end());
  for (auto [u, v] : es) {
    append_nat(bytes, static_cast<std::uint64_t>(u));
    append_nat(bytes, static_cast<std::uint64_t>(v));
  }
  for (int nv = 0; nv < n; ++nv) {
    int v = old_id[nv];
    append_nat(bytes, static_cast<std::uint64_t>(g.degree(v)));
    // Cycle started at the neighbor with the minimal new id.
    int start = -1, best = -1;
    for (int w : g.neighbors(v))
      if (start == -1 || new_id[w] < best) {
        start = w;
        best = new_id[w];
      }
    for (int w : r.cycle_from(v, start))
      append_nat(bytes, static_cast<std::uint64_t>(new_id[w]));
  }
  return bytes;
}

}  // namespace

CanonicalForm canonical_code_rotation(const RotationSystem& r) {
  if (auto v = validate_rotation(r))
    fail(ErrorCode::InvalidRotation,
         "canonical_code_rotation: invalid rotation at vertex " +
             std::to_string(v->vertex) + ": " + v->reason);
  const Graph& g = r.graph();
  if (!is_connected(g))
    fail(ErrorCode::Disconnected, "canonical_code_rotation: disconnected graph");

  CanonicalForm best;
  bool have = false;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      CoordinateCode cc = global_coords(r, a, b);
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (cc.coord[u].size() != cc.coord[v].size())
          return cc.coord[u].size() < cc.coord[v].size();
        return cc.coord[u] < cc.coord[v];
      });
      std::vector<int> new_id(n);
      for (int i = 0; i < n; ++i) new_id[order[i]] = i;
      auto bytes = serialize_reindexed(r, new_id);
      if (!have || bytes < best.code) {
        have = true;
        best.code = std::move(bytes);
        best.origin_a = a;
        best.origin_b = b;
        best.conjugated = false;
      }
    }
  return best;
}

CanonicalForm canonical_code_graph(const Graph& g) {
  RotationSystem r = embed(g);
  CanonicalForm c1 = canonical_code_rotation(r);
  CanonicalForm c2 = canonical_code_rotation(conjugate(r));
  if (c2.code < c1.code) {
    c2.conjugated = true;
    return c2;
  }
  return c1;
}

bool iso_graphs(const Graph& g, const Graph& h) {
  return canonical_code_graph(g).code == canonical_code_graph(h).code;
}

std::string code_hex(const CanonicalForm& form) {
  static const char* digits = "0123456789abcdef";
  std::string out = "pcanon1:";
  for (std::uint8_t b : form.code) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace planarcanon
