#include "planarcanon/local_geometry.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace planarcanon {

Configuration Configuration::x_config(int w, int x, int y, int u, int v) {
  return Configuration{ConfigKind::X, x, y, w, u, v, w};
}

Configuration Configuration::h_config(int z, int w, int x, int y, int u, int v) {
  return Configuration{ConfigKind::H, x, y, z, u, v, w};
}

std::vector<int> Configuration::vertices() const {
  std::vector<int> out{x, y, z, u, v, w};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Configuration::validate(const Graph& g) const {
  for (int p : {x, y, z, u, v, w}) g.check_vertex(p);
  std::vector<int> labeled{x, y, u, v, w};
  if (kind == ConfigKind::H) labeled.push_back(z);
  std::vector<int> sorted = labeled;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::Precondition, "configuration vertices must be distinct");
  if (kind == ConfigKind::X) {
    if (z != w) fail(ErrorCode::Precondition, "X-configuration requires z = w");
    for (int p : {x, y, u, v})
      if (!g.has_edge(w, p))
        fail(ErrorCode::Precondition, "X-configuration: x,y,u,v must neighbor w");
  } else {
    if (!g.has_edge(z, w))
      fail(ErrorCode::Precondition, "H-configuration: z and w must be adjacent");
    if (!g.has_edge(z, x) || !g.has_edge(z, y))
      fail(ErrorCode::Precondition, "H-configuration: x,y must neighbor z");
    if (!g.has_edge(w, u) || !g.has_edge(w, v))
      fail(ErrorCode::Precondition, "H-configuration: u,v must neighbor w");
  }
}

ConfigClass classify_configuration(const RotationSystem& r, const Configuration& c) {
  const Graph& g = r.graph();
  c.validate(g);
  if (c.kind == ConfigKind::X) {
    // Circular order of the four labels around w, starting from u.
    std::vector<int> seq;
    int cur = c.u;
    for (int i = 0; i < g.degree(c.w); ++i) {
      if (cur == c.u || cur == c.x || cur == c.y || cur == c.v) seq.push_back(cur);
      cur = r.succ(c.w, cur);
    }
    const std::vector<int> coll1{c.u, c.x, c.y, c.v}, coll2{c.u, c.v, c.y, c.x};
    const std::vector<int> twist1{c.u, c.y, c.x, c.v}, twist2{c.u, c.v, c.x, c.y};
    if (seq == coll1 || seq == coll2) return ConfigClass::collocated;
    if (seq == twist1 || seq == twist2) return ConfigClass::twisted;
    return ConfigClass::neither;
  }
  // H: the two facial segments through the edge {z,w} are
  // pred_z(w), z, w, succ_w(z) and succ_z(w), z, w, pred_w(z).
  const int p1 = r.pred(c.z, c.w), q1 = r.succ(c.w, c.z);
  const int q2 = r.succ(c.z, c.w), p2 = r.pred(c.w, c.z);
  auto is_coll = [&](int x, int y) {
    return (x == p1 && c.u == q1 && y == q2 && c.v == p2) ||
           (x == q2 && c.u == p2 && y == p1 && c.v == q1);
  };
  if (is_coll(c.x, c.y)) return ConfigClass::collocated;
  if (is_coll(c.y, c.x)) return ConfigClass::twisted;
  return ConfigClass::neither;
}

GeodesicSystem::GeodesicSystem(const Graph& g, const Configuration& c)
    : g_(&g), c_(c), avoid_(c.vertices()) {
  c.validate(g);
  dist_.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    dist_.push_back(bfs_distances_avoiding(g, avoid_, v));
}

Dist GeodesicSystem::d0(int a, int b) const {
  g_->check_vertex(a);
  g_->check_vertex(b);
  return dist_[a][b];
}

bool GeodesicSystem::in_avoid_set(int v) const {
  return std::binary_search(avoid_.begin(), avoid_.end(), v);
}

std::vector<int> GeodesicSystem::support(int a, int b) const {
  std::vector<int> out;
  const Dist d = d0(a, b);
  if (!is_finite(d)) return out;
  for (int v = 0; v < g_->vertex_count(); ++v) {
    if (in_avoid_set(v) && v != a && v != b) continue;
    if (dist_[a][v] + dist_[b][v] == d) out.push_back(v);
  }
  return out;
}

std::vector<PathSeq> GeodesicSystem::geodesics(int a, int b) const {
  return all_geodesics_avoiding(*g_, avoid_, a, b);
}

SphereRegions::SphereRegions(const RotationSystem& r, const FaceSet& f,
                             const std::vector<int>& cycle) {
  const Graph& g = r.graph();
  const int n = g.vertex_count();
  on_cycle_.assign(n, 0);
  side_.assign(n, -1);

  std::set<std::pair<int, int>> cycle_edges;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (on_cycle_[u]) fail(ErrorCode::Internal, "region cycle is not simple");
    on_cycle_[u] = 1;
    cycle_edges.insert({std::min(u, v), std::max(u, v)});
    if (!g.has_edge(u, v)) fail(ErrorCode::Internal, "region cycle misses an edge");
  }

  // Face of each directed edge.
  std::map<std::pair<int, int>, int> face_of;
  for (size_t fi = 0; fi < f.walks.size(); ++fi) {
    const auto& w = f.walks[fi];
    for (size_t t = 0; t < w.size(); ++t)
      face_of[{w[t], w[(t + 1) % w.size()]}] = static_cast<int>(fi);
  }

  // Union faces across every edge not on the cycle.
  const int fcount = static_cast<int>(f.walks.size());
  std::vector<int> comp(fcount, -1);
  std::vector<std::vector<int>> fadj(fcount);
  for (auto [u, v] : g.edges()) {
    if (cycle_edges.count({u, v})) continue;
    int fa = face_of.at({u, v}), fb = face_of.at({v, u});
    fadj[fa].push_back(fb);
    fadj[fb].push_back(fa);
  }
  int ncomp = 0;
  for (int s = 0; s < fcount; ++s) {
    if (comp[s] != -1) continue;
    std::deque<int> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b : fadj[a])
        if (comp[b] == -1) {
          comp[b] = ncomp;
          q.push_back(b);
        }
    }
    ++ncomp;
  }
  if (ncomp != 2)
    fail(ErrorCode::Internal,
         "cycle does not split the sphere into two regions");

  for (size_t fi = 0; fi < f.walks.size(); ++fi)
    for (int v : f.walks[fi])
      if (!on_cycle_[v]) side_[v] = comp[fi];
}

bool SphereRegions::on_cycle(int v) const { return on_cycle_[v]; }
int SphereRegions::side(int v) const { return on_cycle_[v] ? -1 : side_[v]; }
bool SphereRegions::in_closed_region(int v, int s) const {
  return on_cycle_[v] || side_[v] == s;
}

LocalGeometry::LocalGeometry(const RotationSystem& r, const Configuration& c)
    : r_(&r), c_(c), geo_(r.graph(), c), faces_(faces(r)),
      cls_(classify_configuration(r, c)) {}

std::pair<int, int> LocalGeometry::pair_ends(SidePair p) const {
  return p == SidePair::XU ? std::pair{c_.x, c_.u} : std::pair{c_.y, c_.v};
}

std::vector<int> LocalGeometry::closing_cycle(SidePair p, int s, int t,
                                              const PathSeq& mid) const {
  // Cycle end..mid..otherend, then w, then z (z = w collapses for X).
  std::vector<int> cyc;
  auto [e1, e2] = pair_ends(p);
  if (s == e1 && t == e2) {
    cyc = mid.verts;
  } else {
    // Deterministic host geodesic through s and t.
    auto geos = geo_.geodesics(e1, e2);
    const std::vector<int>* host = nullptr;
    size_t is = 0, it = 0;
    for (const auto& q : geos) {
      auto ps = std::find(q.verts.begin(), q.verts.end(), s);
      auto pt = std::find(q.verts.begin(), q.verts.end(), t);
      if (ps != q.verts.end() && pt != q.verts.end() && ps < pt) {
        host = &q.verts;
        is = ps - q.verts.begin();
        it = pt - q.verts.begin();
        break;
      }
    }
    if (!host)
      fail(ErrorCode::Precondition,
           "boundaries: s and t do not lie on a common geodesic");
    cyc.assign(host->begin(), host->begin() + is);
    cyc.insert(cyc.end(), mid.verts.begin(), mid.verts.end());
    cyc.insert(cyc.end(), host->begin() + it + 1, host->end());
  }
  cyc.push_back(c_.w);
  if (c_.z != c_.w) cyc.push_back(c_.z);
  return cyc;
}

BoundaryPair LocalGeometry::pair_boundaries(SidePair p) const {
  auto [e1, e2] = pair_ends(p);
  return boundaries(p, e1, e2);
}

BoundaryPair LocalGeometry::boundaries(SidePair p, int s, int t) const {
  auto key = std::make_pair(s, t);
  auto& cache = bcache_[static_cast<int>(p)];
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto [e1, e2] = pair_ends(p);
  auto geos = geo_.geodesics(s, t);
  if (geos.empty())
    fail(ErrorCode::Precondition, "boundaries: empty geodesic set");
  BoundaryPair out;
  if (geos.size() == 1) {
    out.b1 = out.b2 = geos[0];
    out.singleton = true;
    cache.emplace(key, out);
    return out;
  }

  const std::vector<int> s0 = geo_.support(s, t);
  struct Cand { PathSeq path; int s0_side; SphereRegions regions; };
  std::vector<Cand> bounds;
  for (const auto& path : geos) {
    std::vector<int> cyc = closing_cycle(p, s, t, path);
    SphereRegions reg(*r_, faces_, cyc);
    int side = -1;
    bool ok = true;
    for (int v : s0) {
      if (reg.on_cycle(v)) continue;
      if (side == -1) side = reg.side(v);
      else if (reg.side(v) != side) { ok = false; break; }
    }
    if (!ok) continue;
    if (side == -1)
      fail(ErrorCode::Internal, "distinct geodesics with identical support");
    bounds.push_back({path, side, std::move(reg)});
  }
  if (bounds.size() != 2)
    fail(ErrorCode::Internal, "expected exactly two boundary paths");

  // Index assignment. For the full pair: B2(x,u) lies on y's side of
  // B1(x,u) (and symmetrically for (y,v) with x as the reference). For a
  // sub-pair: B1(s,t) lies on the same side of B2(s,t) as B1(x,u).
  auto classify_is_b1 = [&](const Cand& cand) -> bool {
    if (s == e1 && t == e2) {
      int ref = (p == SidePair::XU) ? c_.y : c_.x;
      if (cand.regions.on_cycle(ref))
        fail(ErrorCode::Internal, "reference vertex on the closing cycle");
      return cand.regions.side(ref) == cand.s0_side;
    }
    BoundaryPair full = pair_boundaries(p);
    for (const auto* ref_path : {&full.b1, &full.b2}) {
      bool is_b1_ref = (ref_path == &full.b1);
      int ref_side = -1;
      bool unanimous = true;
      for (int v : ref_path->verts) {
        if (cand.regions.on_cycle(v)) continue;
        if (ref_side == -1) ref_side = cand.regions.side(v);
        else if (cand.regions.side(v) != ref_side) { unanimous = false; break; }
      }
      if (ref_side == -1 || !unanimous) continue;
      // Referencing B1: candidate is B2 iff B1(x,u) sits with S0 (inside);
      // referencing B2 flips the test.
      bool same = (ref_side == cand.s0_side);
      return is_b1_ref ? !same : same;
    }
    fail(ErrorCode::Internal, "cannot orient sub-pair boundaries");
  };

  bool first_is_b1 = classify_is_b1(bounds[0]);
  bool second_is_b1 = classify_is_b1(bounds[1]);
  if (first_is_b1 == second_is_b1)
    fail(ErrorCode::Internal, "boundary index assignment is not decisive");
  out.b1 = first_is_b1 ? bounds[0].path : bounds[1].path;
  out.b2 = first_is_b1 ? bounds[1].path : bounds[0].path;
  out.singleton = false;
  cache.emplace(key, out);
  return out;
}

namespace {

// First vertex of `path` (walking from the given end) contained in `set`.
int first_common(const PathSeq& path, const std::vector<int>& set, bool from_front) {
  auto contains = [&](int v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  if (from_front) {
    for (int v : path.verts)
      if (contains(v)) return v;
  } else {
    for (auto it = path.verts.rbegin(); it != path.verts.rend(); ++it)
      if (contains(*it)) return *it;
  }
  return -1;
}

}  // namespace

SpecialVertices LocalGeometry::special_vertices() const {
  if (cls_ == ConfigClass::neither)
    fail(ErrorCode::Precondition, "special vertices need a collocated or twisted configuration");
  BoundaryPair xu = pair_boundaries(SidePair::XU);
  BoundaryPair yv = pair_boundaries(SidePair::YV);

  SpecialVertices sv{};
  sv.twisted_variant = (cls_ == ConfigClass::twisted);
  auto need = [&](int v, const char* what) {
    if (v == -1)
      fail(ErrorCode::NoIntersection,
           std::string("boundary systems do not intersect (") + what + ")");
    return v;
  };
  // z1, x1, y1 are shared by both variants.
  sv.z1 = need(first_common(xu.b2, yv.b2.verts, true), "z1");
  sv.x1 = need(first_common(xu.b1, yv.b2.verts, true), "x1");
  sv.y1 = need(first_common(yv.b1, xu.b2.verts, true), "y1");
  if (!sv.twisted_variant) {
    sv.w1 = need(first_common(xu.b2, yv.b2.verts, false), "w1");
    sv.u1 = need(first_common(xu.b1, yv.b2.verts, false), "u1");
    sv.v1 = need(first_common(yv.b1, xu.b2.verts, false), "v1");
  } else {
    // Twisted variant swaps the boundary indices for the w/u/v trio.
    sv.w1 = need(first_common(xu.b1, yv.b1.verts, false), "w1");
    sv.u1 = need(first_common(xu.b2, yv.b1.verts, false), "u1");
    sv.v1 = need(first_common(yv.b2, xu.b1.verts, false), "v1");
  }
  return sv;
}

std::vector<int> LocalGeometry::entrances(ConfigSide side) const {
  if (cls_ == ConfigClass::neither)
    fail(ErrorCode::Precondition, "entrances need a collocated or twisted configuration");
  const Graph& g = r_->graph();
  int from;                 // the end the entrance paths start at
  SidePair own, other;
  switch (side) {
    case ConfigSide::x: from = c_.x; own = SidePair::XU; other = SidePair::YV; break;
    case ConfigSide::u: from = c_.u; own = SidePair::XU; other = SidePair::YV; break;
    case ConfigSide::y: from = c_.y; own = SidePair::YV; other = SidePair::XU; break;
    case ConfigSide::v: from = c_.v; own = SidePair::YV; other = SidePair::XU; break;
    default: fail(ErrorCode::Precondition, "bad side");
  }
  auto [o1, o2] = pair_ends(own);
  std::vector<int> s_own = geo_.support(o1, o2);
  auto [p1, p2] = pair_ends(other);
  std::vector<int> s_other = geo_.support(p1, p2);
  if (s_own.empty() || s_other.empty())
    fail(ErrorCode::NoIntersection, "entrances: empty geodesic system");

  std::vector<int> both_avoid = c_.vertices();
  both_avoid.insert(both_avoid.end(), s_other.begin(), s_other.end());
  std::sort(both_avoid.begin(), both_avoid.end());
  both_avoid.erase(std::unique(both_avoid.begin(), both_avoid.end()), both_avoid.end());
  const auto dist_both = bfs_distances_avoiding(g, both_avoid, from);

  std::vector<int> out;
  for (int e : s_own) {
    if (!std::binary_search(s_other.begin(), s_other.end(), e)) continue;
    if (dist_both[e] == geo_.d0(from, e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());

  if (side == ConfigSide::x) {
    // Geometrically all x-entrances lie on B2(y,v).
    BoundaryPair yv = pair_boundaries(SidePair::YV);
    for (int e : out)
      if (std::find(yv.b2.verts.begin(), yv.b2.verts.end(), e) == yv.b2.verts.end())
        fail(ErrorCode::Internal, "x-entrance off B2(y,v)");
  }
  return out;
}

std::vector<int> LocalGeometry::h_vertices() const {
  auto a = geo_.support(c_.x, c_.u);
  auto b = geo_.support(c_.y, c_.v);
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<int> LocalGeometry::side_vertices(bool x_side) const {
  BoundaryPair xu = pair_boundaries(SidePair::XU);
  BoundaryPair yv = pair_boundaries(SidePair::YV);
  auto segment_to = [&](const PathSeq& p, int stop, bool from_front) {
    std::vector<int> out;
    if (from_front) {
      for (int v : p.verts) { out.push_back(v); if (v == stop) break; }
    } else {
      for (auto it = p.verts.rbegin(); it != p.verts.rend(); ++it) {
        out.push_back(*it);
        if (*it == stop) break;
      }
    }
    return out;
  };
  std::vector<int> out;
  if (cls_ == ConfigClass::collocated) {
    out = x_side ? xu.b1.verts : yv.b1.verts;
  } else {
    SpecialVertices sv = special_vertices();
    if (x_side) {
      out = segment_to(xu.b1, sv.v1, true);
      auto tail = segment_to(yv.b2, sv.v1, false);  // from the v end to v1
      out.insert(out.end(), tail.begin(), tail.end());
    } else {
      out = segment_to(yv.b1, sv.u1, true);
      auto tail = segment_to(xu.b2, sv.u1, false);
      out.insert(out.end(), tail.begin(), tail.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EssentialDecomposition LocalGeometry::essential_decomposition() const {
  BoundaryPair xu = pair_boundaries(SidePair::XU);
  BoundaryPair yv = pair_boundaries(SidePair::YV);
  bool touch = false;
  for (int v : xu.b1.verts)
    if (std::find(yv.b1.verts.begin(), yv.b1.verts.end(), v) != yv.b1.verts.end())
      touch = true;
  if (!touch)
    fail(ErrorCode::NoStrongIntersection,
         "B1(x,u) and B1(y,v) do not touch");

  SpecialVertices sv = special_vertices();
  const Graph& g = r_->graph();

  std::vector<int> vh = h_vertices();
  std::vector<int> old_h;
  Graph hgraph = induced_subgraph(g, vh, &old_h);
  if (!is_connected(hgraph)) fail(ErrorCode::Internal, "H is disconnected");
  BlockDecomposition hblocks = block_decomposition(hgraph);
  std::set<int> hcuts;
  for (int c : hblocks.cutpoints) hcuts.insert(old_h[c]);

  std::set<int> zw_cuts;
  {
    std::vector<int> s0 = geo_.support(sv.z1, sv.w1);
    if (s0.empty())
      fail(ErrorCode::Precondition, "S0(z1,w1) is empty");
    std::vector<int> old_ids;
    Graph lens = induced_subgraph(g, s0, &old_ids);
    if (!is_connected(lens)) fail(ErrorCode::Internal, "S0(z1,w1) not connected");
    for (int c : block_decomposition(lens).cutpoints) zw_cuts.insert(old_ids[c]);
  }

  std::vector<int> essential;
  for (int c : hcuts) {
    bool ok = zw_cuts.count(c) > 0;
    if (c == sv.z1 && sv.x1 == sv.y1 && sv.y1 == sv.z1) ok = true;
    if (c == sv.w1 && sv.u1 == sv.v1 && sv.v1 == sv.w1) ok = true;
    if (ok) essential.push_back(c);
  }
  std::sort(essential.begin(), essential.end(), [&](int a, int b) {
    return geo_.d0(sv.z1, a) < geo_.d0(sv.z1, b);
  });
  if (essential.empty()) {
    // Guaranteed nonempty for collocated configurations; a standalone
    // twisted configuration carries no such guarantee.
    if (cls_ == ConfigClass::collocated)
      fail(ErrorCode::Internal, "strong intersection without an essential cutpoint");
    fail(ErrorCode::Precondition, "twisted configuration without essential cutpoints");
  }
  for (size_t i = 0; i + 1 < essential.size(); ++i)
    if (geo_.d0(sv.z1, essential[i]) == geo_.d0(sv.z1, essential[i + 1]))
      fail(ErrorCode::Internal, "essential cutpoints at equal d0 from z1");
  const auto l = static_cast<Dist>(essential.size());
  if (l > geo_.d0(sv.z1, sv.w1) + 1)
    fail(ErrorCode::Internal, "too many essential cutpoints");

  EssentialDecomposition out;
  out.cutpoints = essential;
  auto union_supports = [&](int a1, int b1, int a2, int b2) {
    auto s = geo_.support(a1, b1);
    auto t = geo_.support(a2, b2);
    s.insert(s.end(), t.begin(), t.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  const int last = essential.back();
  out.segments.push_back(union_supports(c_.x, essential[0], c_.y, essential[0]));
  for (size_t i = 1; i < essential.size(); ++i)
    out.segments.push_back(geo_.support(essential[i - 1], essential[i]));
  out.segments.push_back(union_supports(last, c_.u, last, c_.v));
  return out;
}

ExternalChain LocalGeometry::external_chain() const {
  EssentialDecomposition ed = essential_decomposition();
  const Graph& g = r_->graph();
  const std::vector<int> vh = h_vertices();
  std::vector<char> in_h(g.vertex_count(), 0);
  for (int v : vh) in_h[v] = 1;
  std::vector<char> forbidden = in_h;
  forbidden[c_.z] = 1;
  forbidden[c_.w] = 1;

  // Components of G minus (V(H) u {z,w}) and their attachments in H.
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<int>> comp_contacts;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (forbidden[s] || comp[s] != -1) continue;
    int id = static_cast<int>(comp_contacts.size());
    std::set<int> contacts;
    std::deque<int> q{s};
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (in_h[w]) contacts.insert(w);
        else if (!forbidden[w] && comp[w] == -1) {
          comp[w] = id;
          q.push_back(w);
        }
      }
    }
    comp_contacts.emplace_back(contacts.begin(), contacts.end());
  }

  auto routes_between = [&](int a, int b) {
    std::vector<int> via;
    for (size_t k = 0; k < comp_contacts.size(); ++k) {
      const auto& cs = comp_contacts[k];
      if (std::binary_search(cs.begin(), cs.end(), a) &&
          std::binary_search(cs.begin(), cs.end(), b))
        via.push_back(static_cast<int>(k));
    }
    return via;
  };

  const std::vector<int> xside = side_vertices(true);
  const std::vector<int> yside = side_vertices(false);
  auto on = [](const std::vector<int>& set, int v) {
    return std::binary_search(set.begin(), set.end(), v);
  };

  auto d0x = [&](int v) { return geo_.d0(c_.x, v); };

  // Vertex set of the final segment, with segment membership elsewhere.
  const int l = static_cast<int>(ed.cutpoints.size());
  std::vector<int> seg_of(g.vertex_count(), -1);
  for (int si = static_cast<int>(ed.segments.size()) - 1; si >= 0; --si)
    for (int v : ed.segments[si])
      seg_of[v] = si;  // essential cutpoints resolved below
  std::vector<char> essential_mark(g.vertex_count(), 0);
  for (int e : ed.cutpoints) essential_mark[e] = 1;

  struct Candidate { int a, b; std::vector<int> via; bool x_cap, y_cap; };

  ExternalChain chain;
  int c_cur = ed.cutpoints[0];
  std::optional<bool> want_x;  // side preference carried between steps

  for (int step = 0; step <= l + 1; ++step) {
    if (step == l + 1)
      fail(ErrorCode::Internal, "external chain exceeded its length bound");

    std::vector<Candidate> cands;
    for (int a : vh) {
      if (d0x(a) >= d0x(c_cur)) continue;
      for (int b : vh) {
        if (d0x(b) <= d0x(c_cur)) continue;
        auto via = routes_between(a, b);
        if (via.empty()) continue;
        Candidate cd{a, b, std::move(via), on(xside, a) && on(xside, b),
                     on(yside, a) && on(yside, b)};
        if (!cd.x_cap && !cd.y_cap)
          fail(ErrorCode::Internal, "external path endpoints off both sides");
        cands.push_back(std::move(cd));
      }
    }
    if (cands.empty()) {
      Error e(ErrorCode::NotTriconnectedWitness,
              "no external path: {z, c} separates the graph");
      e.witness_a = c_.z;
      e.witness_b = c_cur;
      throw e;
    }

    bool use_x;
    if (want_x.has_value()) {
      bool have_same = std::any_of(cands.begin(), cands.end(), [&](const Candidate& cd) {
        return *want_x ? cd.x_cap : cd.y_cap;
      });
      use_x = have_same ? *want_x : !*want_x;
    } else {
      use_x = std::any_of(cands.begin(), cands.end(),
                          [](const Candidate& cd) { return cd.x_cap; });
    }
    std::vector<Candidate> filtered;
    for (auto& cd : cands)
      if (use_x ? cd.x_cap : cd.y_cap) filtered.push_back(cd);
    if (filtered.empty())
      fail(ErrorCode::Internal, "side preference filtered all candidates");

    // a maximizing d0(x,a), then b maximizing d0(x,b); both unique.
    Dist besta = -1;
    for (auto& cd : filtered) besta = std::max(besta, d0x(cd.a));
    std::set<int> amax;
    for (auto& cd : filtered)
      if (d0x(cd.a) == besta) amax.insert(cd.a);
    if (amax.size() != 1)
      fail(ErrorCode::Internal, "chain vertex a_i is not unique");
    const int a_cur = *amax.begin();
    Dist bestb = -1;
    for (auto& cd : filtered)
      if (cd.a == a_cur) bestb = std::max(bestb, d0x(cd.b));
    std::set<int> bmax;
    const Candidate* chosen = nullptr;
    for (auto& cd : filtered)
      if (cd.a == a_cur && d0x(cd.b) == bestb) {
        bmax.insert(cd.b);
        chosen = &cd;
      }
    if (bmax.size() != 1)
      fail(ErrorCode::Internal, "chain vertex b_i is not unique");
    const int b_cur = *bmax.begin();

    // Witness path through the smallest admissible component.
    const int comp_id = chosen->via.front();
    PathSeq witness;
    {
      std::vector<int> parent(g.vertex_count(), -2);
      std::deque<int> q;
      for (int w : g.neighbors(a_cur))
        if (comp[w] == comp_id && parent[w] == -2) {
          parent[w] = -1;
          q.push_back(w);
        }
      int exit = -1;
      while (!q.empty() && exit == -1) {
        int v = q.front();
        q.pop_front();
        if (g.has_edge(v, b_cur)) { exit = v; break; }
        for (int w : g.neighbors(v))
          if (comp[w] == comp_id && parent[w] == -2) {
            parent[w] = v;
            q.push_back(w);
          }
      }
      if (exit == -1) fail(ErrorCode::Internal, "witness path not found");
      std::vector<int> mid;
      for (int v = exit; v != -1; v = parent[v]) mid.push_back(v);
      std::reverse(mid.begin(), mid.end());
      witness.verts.push_back(a_cur);
      witness.verts.insert(witness.verts.end(), mid.begin(), mid.end());
      witness.verts.push_back(b_cur);
    }

    chain.steps.push_back(ChainStep{c_cur, a_cur, b_cur, std::move(witness),
                                    use_x, static_cast<int>(chosen->via.size())});
    want_x = use_x;

    // Termination: b_m in the last segment and distinct from e_l.
    const int blast = ed.cutpoints.back();
    if (seg_of[b_cur] == l && b_cur != blast) break;

    if (essential_mark[b_cur]) {
      c_cur = b_cur;
    } else {
      int j = seg_of[b_cur];
      if (j < 0 || j >= l)
        fail(ErrorCode::Internal, "chain step out of segment range");
      // The essential cutpoint bounding H_j on the w1 side.
      int cnext = ed.cutpoints[j];
      if (d0x(cnext) <= d0x(b_cur))
        fail(ErrorCode::Internal, "chain failed to progress");
      c_cur = cnext;
    }
  }

  if (static_cast<int>(chain.steps.size()) > l)
    fail(ErrorCode::Internal, "chain longer than the cutpoint count");
  return chain;
}

GeodesicSystem d0_all_pairs(const Graph& g, const Configuration& c) {
  return GeodesicSystem(g, c);
}

BoundaryPair boundaries(const RotationSystem& r, const Configuration& c, int s, int t) {
  LocalGeometry lg(r, c);
  // Prefer the (x,u) system; fall back to (y,v).
  try {
    return lg.boundaries(SidePair::XU, s, t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Precondition) throw;
    return lg.boundaries(SidePair::YV, s, t);
  }
}

SpecialVertices special_vertices(const RotationSystem& r, const Configuration& c) {
  return LocalGeometry(r, c).special_vertices();
}

std::vector<int> entrances(const RotationSystem& r, const Configuration& c,
                           ConfigSide side) {
  return LocalGeometry(r, c).entrances(side);
}

EssentialDecomposition essential_decomposition(const RotationSystem& r,
                                               const Configuration& c) {
  return LocalGeometry(r, c).essential_decomposition();
}

ExternalChain external_chain(const RotationSystem& r, const Configuration& c) {
  return LocalGeometry(r, c).external_chain();
}

std::vector<Configuration> enumerate_x_configurations(const Graph& g) {
  std::vector<Configuration> out;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (g.degree(w) < 4) continue;
    auto nbrs = g.neighbors(w);
    for (int x : nbrs)
      for (int y : nbrs)
        for (int u : nbrs)
          for (int v : nbrs) {
            int ids[4] = {x, y, u, v};
            std::sort(std::begin(ids), std::end(ids));
            if (std::adjacent_find(std::begin(ids), std::end(ids)) != std::end(ids))
              continue;
            out.push_back(Configuration::x_config(w, x, y, u, v));
          }
  }
  return out;
}

std::vector<Configuration> enumerate_h_configurations(const Graph& g) {
  std::vector<Configuration> out;
  for (auto [p, q] : g.edges())
    for (auto [z, w] : {std::pair{p, q}, std::pair{q, p}})
      for (int x : g.neighbors(z)) {
        if (x == w) continue;
        for (int y : g.neighbors(z)) {
          if (y == w || y == x) continue;
          for (int u : g.neighbors(w)) {
            if (u == z || u == x || u == y) continue;
            for (int v : g.neighbors(w)) {
              if (v == z || v == x || v == y || v == u) continue;
              out.push_back(Configuration::h_config(z, w, x, y, u, v));
            }
          }
        }
      }
  return out;
}

}  // namespace planarcanon
