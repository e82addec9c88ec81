#include "planarcanon/embed.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace planarcanon {

namespace {

// A fragment relative to the embedded subgraph: either a single unembedded
// edge between embedded vertices, or a component of the unembedded part
// together with its attachment vertices.
struct Fragment {
  std::vector<int> contacts;        // embedded attachment vertices, sorted
  std::vector<int> interior;        // component vertices (empty for an edge)
  std::pair<int, int> edge{-1, -1}; // set for edge fragments
};

struct Embedder {
  const Graph& g;
  std::vector<char> in_graph_vertex;       // embedded vertices
  std::set<std::pair<int, int>> embedded;  // embedded edges, u < v
  std::vector<std::vector<int>> face_list; // directed closed walks

  explicit Embedder(const Graph& gr) : g(gr), in_graph_vertex(gr.vertex_count(), 0) {}

  bool edge_embedded(int u, int v) const {
    return embedded.count({std::min(u, v), std::max(u, v)}) > 0;
  }

  std::vector<int> initial_cycle() const {
    // Walk from 0 to the smallest neighbor, never turning back, until a
    // vertex repeats; min degree >= 3 guarantees a cycle closes.
    std::vector<int> walk{0};
    std::vector<int> at(g.vertex_count(), -1);
    at[0] = 0;
    int prev = -1, cur = 0;
    for (;;) {
      int next = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) { next = w; break; }
      if (next == -1) fail(ErrorCode::Internal, "walk stuck");
      if (at[next] != -1) {
        return std::vector<int>(walk.begin() + at[next], walk.end());
      }
      at[next] = static_cast<int>(walk.size());
      walk.push_back(next);
      prev = cur;
      cur = next;
    }
  }

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    // Unembedded edges between embedded vertices.
    for (auto [u, v] : g.edges())
      if (in_graph_vertex[u] && in_graph_vertex[v] && !edge_embedded(u, v)) {
        Fragment f;
        f.contacts = {u, v};
        f.edge = {u, v};
        out.push_back(std::move(f));
      }
    // Components of the unembedded part.
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
      if (in_graph_vertex[s] || seen[s]) continue;
      Fragment f;
      std::deque<int> q{s};
      seen[s] = 1;
      std::set<int> contacts;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        f.interior.push_back(v);
        for (int w : g.neighbors(v)) {
          if (in_graph_vertex[w]) contacts.insert(w);
          else if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
        }
      }
      std::sort(f.interior.begin(), f.interior.end());
      f.contacts.assign(contacts.begin(), contacts.end());
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<int> admissible_faces(const Fragment& f) const {
    std::vector<int> out;
    for (size_t i = 0; i < face_list.size(); ++i) {
      const auto& walk = face_list[i];
      bool all = std::all_of(f.contacts.begin(), f.contacts.end(), [&](int c) {
        return std::find(walk.begin(), walk.end(), c) != walk.end();
      });
      if (all) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  // Deterministic path across the fragment between two contact vertices.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.edge.first != -1) return {f.edge.first, f.edge.second};
    if (f.contacts.size() < 2)
      fail(ErrorCode::Internal, "fragment with fewer than two contacts");
    int alpha = f.contacts[0];
    int beta = f.contacts[1];
    std::vector<int> parent(g.vertex_count(), -2);
    std::deque<int> q;
    for (int w : g.neighbors(alpha))
      if (!in_graph_vertex[w] &&
          std::binary_search(f.interior.begin(), f.interior.end(), w) &&
          parent[w] == -2) {
        parent[w] = -1;
        q.push_back(w);
      }
    int exit = -1;
    while (!q.empty() && exit == -1) {
      int v = q.front();
      q.pop_front();
      if (g.has_edge(v, beta)) { exit = v; break; }
      for (int w : g.neighbors(v))
        if (!in_graph_vertex[w] && parent[w] == -2) {
          parent[w] = v;
          q.push_back(w);
        }
    }
    if (exit == -1) fail(ErrorCode::Internal, "fragment path not found");
    std::vector<int> mid;
    for (int v = exit; v != -1; v = parent[v]) mid.push_back(v);
    std::reverse(mid.begin(), mid.end());
    std::vector<int> path{alpha};
    path.insert(path.end(), mid.begin(), mid.end());
    path.push_back(beta);
    return path;
  }

  void embed_path(int face_idx, const std::vector<int>& path) {
    const std::vector<int> F = face_list[face_idx];
    const int L = static_cast<int>(F.size());
    int alpha = path.front(), beta = path.back();
    int i = -1, j = -1;
    for (int t = 0; t < L; ++t) {
      if (F[t] == alpha) i = t;
      if (F[t] == beta) j = t;
    }
    if (i < 0 || j < 0 || i == j) fail(ErrorCode::Internal, "bad face split");

    // Face A keeps F's directed edges from beta around to alpha; face B
    // keeps those from alpha to beta; the path is inserted once forward,
    // once backward, so every directed edge still lies in exactly one face.
    std::vector<int> A(path.begin(), path.end());
    for (int t = (j + 1) % L; t != i; t = (t + 1) % L) A.push_back(F[t]);
    std::vector<int> B(path.rbegin(), path.rend());
    for (int t = (i + 1) % L; t != j; t = (t + 1) % L) B.push_back(F[t]);

    face_list[face_idx] = std::move(A);
    face_list.push_back(std::move(B));

    for (size_t t = 0; t + 1 < path.size(); ++t) {
      embedded.insert({std::min(path[t], path[t + 1]), std::max(path[t], path[t + 1])});
      in_graph_vertex[path[t]] = 1;
    }
    in_graph_vertex[path.back()] = 1;
  }

  RotationSystem run() {
    auto cyc = initial_cycle();
    for (int v : cyc) in_graph_vertex[v] = 1;
    for (size_t t = 0; t < cyc.size(); ++t) {
      int u = cyc[t], v = cyc[(t + 1) % cyc.size()];
      embedded.insert({std::min(u, v), std::max(u, v)});
    }
    face_list.push_back(cyc);
    face_list.emplace_back(cyc.rbegin(), cyc.rend());

    while (static_cast<int>(embedded.size()) < g.edge_count()) {
      auto frags = fragments();
      if (frags.empty()) fail(ErrorCode::Internal, "edges left but no fragments");
      int chosen = -1;
      std::vector<int> chosen_faces;
      for (size_t fi = 0; fi < frags.size(); ++fi) {
        auto adm = admissible_faces(frags[fi]);
        if (adm.empty())
          fail(ErrorCode::NotPlanar, "graph admits no sphere embedding");
        if (adm.size() == 1 && chosen == -1) {
          chosen = static_cast<int>(fi);
          chosen_faces = adm;
        }
      }
      if (chosen == -1) {
        chosen = 0;
        chosen_faces = admissible_faces(frags[0]);
      }
      embed_path(chosen_faces[0], fragment_path(frags[chosen]));
    }

    // Consecutive face entries (u,v),(v,w) define succ_v(u) = w.
    std::vector<std::vector<std::pair<int, int>>> pairs(g.vertex_count());
    for (const auto& walk : face_list) {
      const int L = static_cast<int>(walk.size());
      for (int t = 0; t < L; ++t) {
        int u = walk[t], v = walk[(t + 1) % L], w = walk[(t + 2) % L];
        pairs[v].emplace_back(u, w);
      }
    }
    RotationSystem r(g, std::move(pairs));
    if (!r.shape_ok())
      fail(ErrorCode::Internal, "face walks did not assemble into a rotation");
    return r;
  }
};

}  // namespace

RotationSystem embed(const Graph& g) {
  if (!is_k_connected(g, 3))
    fail(ErrorCode::NotTriconnected, "embed requires a triconnected graph");
  Embedder e(g);
  RotationSystem r = e.run();
  if (genus_check(r) != 2)
    fail(ErrorCode::Internal, "embedding is not spherical");
  return r;
}

}  // namespace planarcanon
