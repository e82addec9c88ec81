#include "planarcanon/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "planarcanon/embed.hpp"
#include "planarcanon/oracle.hpp"
#include "planarcanon/wl.hpp"

namespace planarcanon {

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PLANARCANON_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
  threads = std::min<long>(resolve_thread_count(threads), count);
  if (threads <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  std::mutex err_mu;
  std::exception_ptr first_error;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

constexpr size_t kMaxFailures = 25;

// Per-worker buckets merged in index order keep reports deterministic.
struct Collector {
  std::vector<std::vector<std::string>> buckets;
  std::vector<long> counts;

  explicit Collector(long n) : buckets(n), counts(n, 0) {}
  void fail(long i, std::string msg) {
    if (buckets[i].size() < kMaxFailures) buckets[i].push_back(std::move(msg));
  }
  void merge_into(SuiteResult& r) const {
    for (long c : counts) r.checked += c;
    for (const auto& b : buckets)
      for (const auto& m : b)
        if (r.failures.size() < kMaxFailures) r.failures.push_back(m);
    r.pass = r.failures.empty();
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int ceil_log2(long long x) {
  int r = 0;
  while ((1LL << r) < x) ++r;
  return r;
}

// C_ab(v;P): the step-coordinate sequence of a concrete path.
std::vector<int> code_of_path(const RotationSystem& r, int b, const PathSeq& p) {
  std::vector<int> code;
  for (size_t i = 1; i < p.verts.size(); ++i) {
    int at = p.verts[i - 1];
    int from = (i == 1) ? b : p.verts[i - 2];
    code.push_back(local_coord(r, at, from, p.verts[i]));
  }
  return code;
}

std::string cfg_str(const CorpusEntry& e, const Configuration& c) {
  std::string kind = c.kind == ConfigKind::X ? "X" : "H";
  return e.name + " " + kind + "(z=" + std::to_string(c.z) +
         ",w=" + std::to_string(c.w) + ",x=" + std::to_string(c.x) +
         ",y=" + std::to_string(c.y) + ",u=" + std::to_string(c.u) +
         ",v=" + std::to_string(c.v) + ")";
}

// ---------------------------------------------------------------------------

SuiteResult suite_euler(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "euler"};
  Collector col(corpus.entries.size());
  parallel_for(corpus.entries.size(), opt.threads, [&](long i) {
    const auto& e = corpus.entries[i];
    RotationSystem r = embed(e.graph);
    ++col.counts[i];
    if (genus_check(r) != 2) col.fail(i, e.name + ": genus check failed");
    FaceSet f = faces(r);
    if (f.total_directed_edges() != 2 * e.graph.edge_count())
      col.fail(i, e.name + ": face walks do not partition directed edges");
    std::set<std::pair<int, int>> seen;
    for (const auto& w : f.walks)
      for (size_t t = 0; t < w.size(); ++t)
        if (!seen.insert({w[t], w[(t + 1) % w.size()]}).second)
          col.fail(i, e.name + ": directed edge appears in two faces");
  });
  col.merge_into(out);
  return out;
}

SuiteResult suite_laylay(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "laylay"};
  Collector col(corpus.entries.size());
  parallel_for(corpus.entries.size(), opt.threads, [&](long i) {
    const auto& e = corpus.entries[i];
    RotationSystem r = embed(e.graph);
    RotationSystem rc = conjugate(r);
    ++col.counts[i];
    auto res = rotations_of_layout(layout_of(r));
    if (std::holds_alternative<LayoutInconsistency>(res)) {
      col.fail(i, e.name + ": layout reported inconsistent");
      return;
    }
    const auto& pair = std::get<RotationPair>(res);
    const bool direct = pair.primary == r && pair.conjugated == rc;
    const bool flipped = pair.primary == rc && pair.conjugated == r;
    if (!direct && !flipped)
      col.fail(i, e.name + ": reconstruction differs from {R, R*}");
    if (!(layout_of(r) == layout_of(rc)))
      col.fail(i, e.name + ": L(R) != L(R*)");
  });
  col.merge_into(out);
  return out;
}

SuiteResult suite_coords(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "coords"};
  Collector col(corpus.entries.size());
  parallel_for(corpus.entries.size(), opt.threads, [&](long i) {
    const auto& e = corpus.entries[i];
    const Graph& g = e.graph;
    RotationSystem r = embed(g);
    for (int a = 0; a < g.vertex_count(); ++a) {
      const auto dist = bfs_distances(g, a);
      for (int b : g.neighbors(a)) {
        CoordinateCode cc = global_coords(r, a, b);
        ++col.counts[i];
        std::set<std::vector<int>> all;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (static_cast<Dist>(cc.coord[v].size()) != dist[v])
            col.fail(i, e.name + ": coordinate length != distance");
          if (!all.insert(cc.coord[v]).second)
            col.fail(i, e.name + ": coordinates are not injective");
          PathSeq p = decode_coordinate_path(r, a, b, cc.coord[v]);
          p.validate_in(g);
          if (p.verts.back() != v || code_of_path(r, b, p) != cc.coord[v])
            col.fail(i, e.name + ": path reconstruction mismatch");
          // Prefix identity along the extreme-left path.
          for (size_t len = 1; len + 1 < p.verts.size(); ++len) {
            int u = p.verts[len];
            int w = p.verts[len - 1];
            std::vector<int> prefix(cc.coord[v].begin(), cc.coord[v].begin() + len);
            if (prefix != cc.coord[u]) {
              col.fail(i, e.name + ": prefix identity (head) fails");
              break;
            }
            std::vector<int> restv(cc.coord[v].begin() + len, cc.coord[v].end());
            CoordinateCode cu = global_coords(r, u, w);
            if (restv != cu.coord[v]) {
              col.fail(i, e.name + ": prefix identity (tail) fails");
              break;
            }
          }
        }
        // Small instances: the layered DP equals the brute-force minimum
        // over every enumerated shortest path.
        if (g.vertex_count() <= 8) {
          for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> best;
            bool have = false;
            for (const auto& p : all_geodesics_avoiding(g, {}, a, v)) {
              auto code = code_of_path(r, b, p);
              if (!have || code < best) {
                best = code;
                have = true;
              }
            }
            if (!have || best != cc.coord[v])
              col.fail(i, e.name + ": DP disagrees with enumerated minimum");
          }
        }
      }
    }
  });
  col.merge_into(out);
  return out;
}

SuiteResult suite_canon_vs_oracle(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "canon-vs-oracle"};
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& e : corpus.entries) {
    if (e.graph.vertex_count() > 8) continue;
    graphs.emplace_back(e.name, e.graph);
    for (int t = 0; t < 5; ++t) {
      auto perm = random_permutation(e.graph.vertex_count(),
                                     opt.seed + 97 * static_cast<int>(graphs.size()) + t);
      graphs.emplace_back(e.name + "#p" + std::to_string(t), relabel(e.graph, perm));
    }
  }
  std::vector<std::vector<std::uint8_t>> codes(graphs.size());
  parallel_for(graphs.size(), opt.threads, [&](long i) {
    codes[i] = canonical_code_graph(graphs[i].second).code;
  });
  std::vector<std::pair<long, long>> pairs;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i + 1; j < graphs.size(); ++j)
      pairs.emplace_back(i, j);
  Collector col(pairs.size());
  parallel_for(pairs.size(), opt.threads, [&](long p) {
    auto [i, j] = pairs[p];
    ++col.counts[p];
    const bool same_code = codes[i] == codes[j];
    const bool iso = brute_force_isomorphic(graphs[i].second, graphs[j].second);
    if (same_code != iso)
      col.fail(p, graphs[i].first + " vs " + graphs[j].first +
                      ": code equality " + (same_code ? "true" : "false") +
                      " but oracle " + (iso ? "true" : "false"));
  });
  col.merge_into(out);
  return out;
}

// ---------------------------------------------------------------------------
// Geometry suites

std::vector<Configuration> all_configurations(const Graph& g) {
  auto xs = enumerate_x_configurations(g);
  auto hs = enumerate_h_configurations(g);
  xs.insert(xs.end(), hs.begin(), hs.end());
  return xs;
}

// Independent recomputation of the boundary set: a geodesic is a boundary
// iff its closing cycle keeps all of S0 in one closed region.
std::vector<PathSeq> boundary_paths_by_regions(const LocalGeometry& lg,
                                               SidePair sp,
                                               const std::vector<PathSeq>& geos,
                                               const std::vector<int>& s0) {
  const Configuration& c = lg.config();
  std::vector<PathSeq> out;
  for (const auto& p : geos) {
    std::vector<int> cyc = p.verts;
    cyc.push_back(c.w);
    if (c.z != c.w) cyc.push_back(c.z);
    SphereRegions reg(lg.rotation(), lg.face_set(), cyc);
    int side = -1;
    bool ok = true;
    for (int v : s0) {
      if (reg.on_cycle(v)) continue;
      if (side == -1) side = reg.side(v);
      else if (reg.side(v) != side) { ok = false; break; }
    }
    (void)sp;
    if (ok) out.push_back(p);
  }
  return out;
}

PathSeq path_segment(const PathSeq& p, int s, int t) {
  auto is = std::find(p.verts.begin(), p.verts.end(), s);
  auto it = std::find(p.verts.begin(), p.verts.end(), t);
  if (is == p.verts.end() || it == p.verts.end())
    fail(ErrorCode::Internal, "segment endpoints missing");
  PathSeq out;
  if (is <= it) out.verts.assign(is, it + 1);
  else {
    out.verts.assign(it, is + 1);
    std::reverse(out.verts.begin(), out.verts.end());
  }
  return out;
}

SuiteResult suite_boundaries(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "boundaries"};
  auto entries = corpus.with_max_n(opt.nmax);
  Collector col(entries.size());
  parallel_for(entries.size(), opt.threads, [&](long i) {
    const auto& e = *entries[i];
    RotationSystem r = embed(e.graph);
    for (const auto& c : all_configurations(e.graph)) {
      LocalGeometry lg(r, c);
      if (lg.cls() == ConfigClass::neither) continue;
      ++col.counts[i];
      const auto& geo = lg.geo();
      if (lg.cls() == ConfigClass::collocated) {
        if (!is_finite(geo.d0(c.x, c.u)) || !is_finite(geo.d0(c.y, c.v)))
          col.fail(i, cfg_str(e, c) + ": collocated with empty geodesic system");
      }
      for (SidePair sp : {SidePair::XU, SidePair::YV}) {
        auto [s, t] = lg.pair_ends(sp);
        if (!is_finite(geo.d0(s, t))) continue;
        auto geos = geo.geodesics(s, t);
        BoundaryPair bp = lg.boundaries(sp, s, t);
        auto bnds = boundary_paths_by_regions(lg, sp, geos, geo.support(s, t));
        if (geos.size() == 1) {
          if (!bp.singleton || !(bp.b1 == geos[0]))
            col.fail(i, cfg_str(e, c) + ": singleton boundary convention broken");
          continue;
        }
        if (bnds.size() != 2)
          col.fail(i, cfg_str(e, c) + ": boundary count " +
                          std::to_string(bnds.size()) + " != 2");
        bool found1 = false, found2 = false;
        for (const auto& b : bnds) {
          if (b == bp.b1) found1 = true;
          if (b == bp.b2) found2 = true;
        }
        if (!found1 || !found2)
          col.fail(i, cfg_str(e, c) + ": reported boundaries not boundary paths");
      }
      // Special vertices, entrance placement and the S0(z1,w1) boundary
      // composition, whenever the intersection property holds.
      try {
        SpecialVertices sv = lg.special_vertices();
        auto ent = lg.entrances(ConfigSide::x);
        BoundaryPair yv = lg.boundaries(SidePair::YV, c.y, c.v);
        for (int v : ent)
          if (std::find(yv.b2.verts.begin(), yv.b2.verts.end(), v) ==
              yv.b2.verts.end())
            col.fail(i, cfg_str(e, c) + ": x-entrance off B2(y,v)");
        if (!ent.empty()) {
          Dist dmin = kInfDist, dmax = -1;
          int emin = -1, emax = -1;
          for (int v : ent) {
            Dist d = geo.d0(v, c.y);
            if (d < dmin) { dmin = d; emin = v; }
            if (d > dmax) { dmax = d; emax = v; }
          }
          if (emin != sv.z1)
            col.fail(i, cfg_str(e, c) + ": z1 is not the d0(.,y)-minimal entrance");
          if (emax != sv.x1)
            col.fail(i, cfg_str(e, c) + ": x1 is not the d0(.,y)-maximal entrance");
        }
        if (lg.cls() == ConfigClass::collocated && sv.z1 != sv.w1 &&
            is_finite(geo.d0(sv.z1, sv.w1))) {
          BoundaryPair zw = lg.boundaries(SidePair::XU, sv.z1, sv.w1);
          BoundaryPair xu = lg.boundaries(SidePair::XU, c.x, c.u);
          PathSeq seg1 = path_segment(yv.b2, sv.z1, sv.w1);
          PathSeq seg2 = path_segment(xu.b2, sv.z1, sv.w1);
          if (!(zw.b1 == seg1))
            col.fail(i, cfg_str(e, c) + ": B1(z1,w1) != B2(y,v)[z1,w1]");
          if (!(zw.b2 == seg2))
            col.fail(i, cfg_str(e, c) + ": B2(z1,w1) != B2(x,u)[z1,w1]");
          for (int must : {sv.x1, sv.u1})
            if (std::find(zw.b1.verts.begin(), zw.b1.verts.end(), must) ==
                zw.b1.verts.end())
              col.fail(i, cfg_str(e, c) + ": B1(z1,w1) misses x1/u1");
          for (int must : {sv.y1, sv.v1})
            if (std::find(zw.b2.verts.begin(), zw.b2.verts.end(), must) ==
                zw.b2.verts.end())
              col.fail(i, cfg_str(e, c) + ": B2(z1,w1) misses y1/v1");
        }
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NoIntersection &&
            err.code() != ErrorCode::Precondition)
          col.fail(i, cfg_str(e, c) + ": " + err.what());
      }
    }
  });
  col.merge_into(out);
  return out;
}

SuiteResult suite_twisted_intersection(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "twisted-intersection"};
  auto entries = corpus.with_max_n(opt.nmax);
  Collector col(entries.size());
  parallel_for(entries.size(), opt.threads, [&](long i) {
    const auto& e = *entries[i];
    RotationSystem r = embed(e.graph);
    for (const auto& c : all_configurations(e.graph)) {
      if (classify_configuration(r, c) != ConfigClass::twisted) continue;
      GeodesicSystem geo(e.graph, c);
      auto pxs = geo.geodesics(c.x, c.u);
      auto qys = geo.geodesics(c.y, c.v);
      if (pxs.empty() || qys.empty()) continue;
      ++col.counts[i];
      for (const auto& p : pxs)
        for (const auto& q : qys) {
          bool meet = false;
          for (int v : p.verts)
            if (std::find(q.verts.begin(), q.verts.end(), v) != q.verts.end()) {
              meet = true;
              break;
            }
          if (!meet) {
            col.fail(i, cfg_str(e, c) + ": twisted geodesics with no common point");
            break;
          }
        }
    }
  });
  col.merge_into(out);
  return out;
}

SuiteResult suite_blockpath(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "blockpath"};
  auto entries = corpus.with_max_n(opt.nmax);
  Collector col(entries.size());
  parallel_for(entries.size(), opt.threads, [&](long i) {
    const auto& e = *entries[i];
    RotationSystem r = embed(e.graph);
    for (const auto& c : all_configurations(e.graph)) {
      LocalGeometry lg(r, c);
      if (lg.cls() == ConfigClass::neither) continue;
      const auto& geo = lg.geo();
      for (SidePair sp : {SidePair::XU, SidePair::YV}) {
        auto [s, t] = lg.pair_ends(sp);
        if (!is_finite(geo.d0(s, t))) continue;
        ++col.counts[i];
        auto s0 = geo.support(s, t);
        std::vector<int> old_ids;
        Graph sub = induced_subgraph(e.graph, s0, &old_ids);
        BlockDecomposition bd = block_decomposition(sub);
        if (!bd.block_tree.has_value()) {
          col.fail(i, cfg_str(e, c) + ": cut-block relation not simple");
          continue;
        }
        std::vector<int> deg(bd.blocks.size(), 0);
        for (auto [p, q] : *bd.block_tree) {
          ++deg[p];
          ++deg[q];
        }
        for (int d : deg)
          if (d > 2) col.fail(i, cfg_str(e, c) + ": block-tree is not a path");
        // Cutpoints of G[S0(s,t)] are the common vertices of the two
        // boundaries.
        auto bp = lg.boundaries(sp, s, t);
        std::set<int> common;
        for (int v : bp.b1.verts)
          if (std::find(bp.b2.verts.begin(), bp.b2.verts.end(), v) !=
              bp.b2.verts.end())
            common.insert(v);
        common.erase(s);
        common.erase(t);
        std::set<int> cuts;
        for (int cp : bd.cutpoints) cuts.insert(old_ids[cp]);
        if (cuts != common)
          col.fail(i, cfg_str(e, c) + ": cutpoints differ from boundary meets");
      }
    }
  });
  col.merge_into(out);
  return out;
}

// ---------------------------------------------------------------------------

Graph path_graph(int edges) {
  Graph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

SuiteResult suite_halving_bounds(const Corpus&, const SuiteOptions& opt) {
  SuiteResult out{.suite = "halving-bounds"};
  struct Fixture {
    Graph a, b;
    int ua, va, ub, vb;
    Dist d;  // smaller finite pebbled distance
    std::string name;
  };
  std::vector<Fixture> fixtures;
  for (int da = 1; da <= 8; ++da)
    for (int db = 1; db <= 9; ++db) {
      if (da == db) continue;
      fixtures.push_back({path_graph(da), path_graph(db), 0, da, 0, db,
                          std::min(da, db),
                          "P" + std::to_string(da) + "/P" + std::to_string(db)});
    }
  for (int da = 1; da <= 8; ++da) {
    // Opposite side in a different component: infinite distance.
    Graph b(da + 3);
    for (int i = 0; i + 1 < da + 1; ++i) b.add_edge(i, i + 1);
    b.add_edge(da + 1, da + 2);
    fixtures.push_back({path_graph(da), std::move(b), 0, da, 0, da + 1, da,
                        "P" + std::to_string(da) + "/inf"});
  }
  Collector col(fixtures.size());
  parallel_for(fixtures.size(), opt.threads, [&](long i) {
    const auto& f = fixtures[i];
    ++col.counts[i];
    Structure a = Structure::graph(f.a), b = Structure::graph(f.b);
    DepthSolver solver(a, b, 3);
    GamePosition start = GamePosition::empty(3);
    start.left[0] = f.ua;
    start.right[0] = f.ub;
    start.left[1] = f.va;
    start.right[1] = f.vb;
    const int bound = ceil_log2(f.d);
    auto strat = spoiler_halving(0, 1, 2);
    auto dup = duplicator_optimal(solver);
    Transcript t = play(a, b, *strat, *dup, 3, bound, start);
    if (t.winner != "spoiler" || t.round > bound)
      col.fail(i, f.name + ": halving needed more than " +
                      std::to_string(bound) + " rounds (" + t.winner + "@" +
                      std::to_string(t.round) + " " + t.error + ")");
  });
  col.merge_into(out);
  return out;
}

SuiteResult suite_wl_sweep(const Corpus& corpus, const SuiteOptions& opt) {
  SuiteResult out{.suite = "wl-sweep"};
  std::vector<const CorpusEntry*> entries = corpus.with_max_n(std::min(opt.nmax, 10));
  std::vector<std::pair<long, long>> pairs;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      pairs.emplace_back(i, j);
  Collector col(pairs.size());
  parallel_for(pairs.size(), opt.threads, [&](long p) {
    auto [i, j] = pairs[p];
    const Graph& g = entries[i]->graph;
    const Graph& h = entries[j]->graph;
    ++col.counts[p];
    const bool iso = brute_force_isomorphic(g, h);
    const int n = std::max(g.vertex_count(), h.vertex_count());
    auto v3 = wl_distinguish(g, h, 3, n + 5);
    if (iso) {
      if (v3.distinguished)
        col.fail(p, entries[i]->name + " vs " + entries[j]->name +
                        ": 3-WL split an isomorphic pair");
      return;
    }
    if (!v3.distinguished) {
      col.fail(p, entries[i]->name + " vs " + entries[j]->name +
                      ": 3-WL failed to distinguish");
      return;
    }
    if (v3.round > n)
      col.fail(p, entries[i]->name + " vs " + entries[j]->name +
                      ": 3-WL rounds exceed n");
    // Dimension monotonicity for k = 1,2 and the count-free comparison.
    for (int k = 1; k <= 2; ++k) {
      auto vk = wl_distinguish(g, h, k, n + 5);
      if (!vk.distinguished) continue;
      auto vk1 = wl_distinguish(g, h, k + 1, n + 5);
      if (!vk1.distinguished || vk1.round > vk.round)
        col.fail(p, entries[i]->name + " vs " + entries[j]->name +
                        ": dimension monotonicity fails at k=" + std::to_string(k));
    }
    WlOptions cf;
    cf.count_free = true;
    auto vfree = wl_distinguish(g, h, 3, n + 5, cf);
    if (vfree.distinguished && !v3.distinguished)
      col.fail(p, entries[i]->name + " vs " + entries[j]->name +
                      ": count-free stronger than counting");
  });
  col.merge_into(out);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumerations

std::vector<Graph> all_min_deg3_connected(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> reps;
  const long total = 1L << slots.size();
  for (long mask = 0; mask < total; ++mask) {
    std::vector<int> deg(n, 0);
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) {
        ++deg[slots[s].first];
        ++deg[slots[s].second];
      }
    if (*std::min_element(deg.begin(), deg.end()) < 3) continue;
    std::vector<std::pair<int, int>> edges;
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.push_back(slots[s]);
    Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;
    bool dup = false;
    for (const auto& rep : reps)
      if (brute_force_isomorphic(rep, g)) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace

std::vector<Graph> all_triconnected_planar_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_min_deg3_connected(n)) {
    if (!is_k_connected(g, 3)) continue;
    try {
      embed(g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotPlanar) continue;
      throw;
    }
    out.push_back(g);
  }
  return out;
}

std::vector<RotationSystem> all_rotation_systems_up_to_iso(int n) {
  std::vector<RotationSystem> reps;
  std::set<std::vector<std::uint8_t>> seen;
  for (const Graph& g : all_min_deg3_connected(n)) {
    // All per-vertex cyclic orders: fix the first neighbor, permute the rest.
    std::vector<std::vector<std::vector<int>>> orders(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto nbrs = g.neighbors(v);
      std::vector<int> rest(nbrs.begin() + 1, nbrs.end());
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<int> cyc{nbrs[0]};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        orders[v].push_back(cyc);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::vector<size_t> pick(g.vertex_count(), 0);
    for (;;) {
      std::vector<std::vector<int>> cycles;
      for (int v = 0; v < g.vertex_count(); ++v) cycles.push_back(orders[v][pick[v]]);
      RotationSystem r = RotationSystem::from_cycles(g, cycles);
      auto code = canonical_code_rotation(r).code;
      if (seen.insert(code).second) reps.push_back(std::move(r));
      int v = 0;
      while (v < g.vertex_count() && ++pick[v] == orders[v].size()) pick[v++] = 0;
      if (v == g.vertex_count()) break;
    }
  }
  return reps;
}

namespace {

SuiteResult suite_depth_envelopes(const Corpus&, const SuiteOptions& opt) {
  SuiteResult out{.suite = "depth-envelopes"};

  // Rotation systems with n <= 5: exact D^5 below 3 log2 n + 8.
  std::vector<RotationSystem> rots;
  for (int n = 4; n <= 5; ++n)
    for (auto& r : all_rotation_systems_up_to_iso(n)) rots.push_back(std::move(r));
  std::vector<std::pair<long, long>> rpairs;
  for (size_t i = 0; i < rots.size(); ++i)
    for (size_t j = i + 1; j < rots.size(); ++j) rpairs.emplace_back(i, j);
  Collector col(rpairs.size());
  parallel_for(rpairs.size(), opt.threads, [&](long p) {
    auto [i, j] = rpairs[p];
    ++col.counts[p];
    const int n = std::min(rots[i].graph().vertex_count(),
                           rots[j].graph().vertex_count());
    const int cap = static_cast<int>(std::floor(3 * std::log2(n) + 8)) - 1;
    DepthSolver solver(Structure::rotation(rots[i]), Structure::rotation(rots[j]), 5);
    auto res = solver.solve(cap);
    if (res.kind != SolveOutcome::Kind::spoiler_wins)
      col.fail(p, "rotation pair " + std::to_string(i) + "/" + std::to_string(j) +
                      ": D5 not below 3 log n + 8");
  });
  col.merge_into(out);

  // Triconnected planar graphs with n <= 6: D at k=4 below 11 log2 n + 43.
  std::vector<Graph> graphs;
  for (int n = 4; n <= 6; ++n)
    for (auto& g : all_triconnected_planar_graphs(n)) graphs.push_back(std::move(g));
  std::vector<std::pair<long, long>> gpairs;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i + 1; j < graphs.size(); ++j) {
      if (brute_force_isomorphic(graphs[i], graphs[j])) continue;
      gpairs.emplace_back(i, j);
    }
  Collector col2(gpairs.size());
  parallel_for(gpairs.size(), opt.threads, [&](long p) {
    auto [i, j] = gpairs[p];
    ++col2.counts[p];
    const int n = std::min(graphs[i].vertex_count(), graphs[j].vertex_count());
    const int cap = static_cast<int>(std::floor(11 * std::log2(n) + 43)) - 1;
    DepthSolver solver(Structure::graph(graphs[i]), Structure::graph(graphs[j]), 4);
    auto res = solver.solve(cap);
    if (res.kind != SolveOutcome::Kind::spoiler_wins)
      col2.fail(p, "graph pair " + std::to_string(i) + "/" + std::to_string(j) +
                       ": D4 not below 11 log n + 43");
  });
  SuiteResult part2{.suite = "depth-envelopes"};
  col2.merge_into(part2);
  out.checked += part2.checked;
  for (auto& f : part2.failures) out.failures.push_back(f);
  out.pass = out.failures.empty();
  return out;
}

}  // namespace

SuiteResult check_relabel_invariance(const Corpus& corpus, int trials,
                                     const SuiteOptions& opt) {
  SuiteResult out{.suite = "relabel-invariance"};
  Collector col(corpus.entries.size());
  parallel_for(corpus.entries.size(), opt.threads, [&](long i) {
    const auto& e = corpus.entries[i];
    auto base = canonical_code_graph(e.graph).code;
    for (int t = 0; t < trials; ++t) {
      ++col.counts[i];
      auto perm = random_permutation(e.graph.vertex_count(),
                                     opt.seed + 1000 * static_cast<int>(i) + t);
      if (canonical_code_graph(relabel(e.graph, perm)).code != base) {
        col.fail(i, e.name + ": relabeling changed the canonical code");
        return;
      }
    }
  });
  col.merge_into(out);
  return out;
}

std::vector<std::string> suite_names() {
  return {"euler",       "laylay",      "coords",
          "canon-vs-oracle", "boundaries",  "twisted-intersection",
          "blockpath",   "halving-bounds", "wl-sweep",
          "depth-envelopes"};
}

SuiteResult run_suite(const std::string& suite, const Corpus& corpus,
                      const SuiteOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  if (suite == "euler") r = suite_euler(corpus, opt);
  else if (suite == "laylay") r = suite_laylay(corpus, opt);
  else if (suite == "coords") r = suite_coords(corpus, opt);
  else if (suite == "canon-vs-oracle") r = suite_canon_vs_oracle(corpus, opt);
  else if (suite == "boundaries") r = suite_boundaries(corpus, opt);
  else if (suite == "twisted-intersection") r = suite_twisted_intersection(corpus, opt);
  else if (suite == "blockpath") r = suite_blockpath(corpus, opt);
  else if (suite == "halving-bounds") r = suite_halving_bounds(corpus, opt);
  else if (suite == "wl-sweep") r = suite_wl_sweep(corpus, opt);
  else if (suite == "depth-envelopes") r = suite_depth_envelopes(corpus, opt);
  else fail(ErrorCode::Precondition, "unknown suite: " + suite);
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace planarcanon
