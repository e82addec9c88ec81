#include "planarcanon/oracle.hpp"

#include <algorithm>

namespace planarcanon {

namespace {

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map,
                    std::vector<char>& used, int v) {
  const int n = g.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || g.degree(v) != h.degree(w)) continue;
    bool ok = true;
    for (int p = 0; p < v && ok; ++p)
      if (g.has_edge(p, v) != h.has_edge(map[p], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend_mapping(g, h, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

bool connected_after_deleting(const Graph& g, const std::vector<int>& del) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (int v : del) gone[v] = 1;
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      if (start == -1) start = v;
      ++alive;
    }
  if (alive == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int found = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++found;
    for (int w : g.neighbors(v))
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return found == alive;
}

bool all_deletions_connected(const Graph& g, std::vector<int>& del, int next,
                             int remaining) {
  if (remaining == 0) return connected_after_deleting(g, del);
  for (int v = next; v < g.vertex_count(); ++v) {
    del.push_back(v);
    if (!all_deletions_connected(g, del, v + 1, remaining - 1)) {
      del.pop_back();
      return false;
    }
    del.pop_back();
  }
  return true;
}

}  // namespace

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(g.vertex_count(), -1);
  std::vector<char> used(g.vertex_count(), 0);
  return extend_mapping(g, h, map, used, 0);
}

bool brute_force_k_connected(const Graph& g, int k) {
  if (g.vertex_count() < k + 1) return false;
  std::vector<int> del;
  for (int size = 0; size <= k - 1; ++size)
    if (!all_deletions_connected(g, del, 0, size)) return false;
  return true;
}

std::vector<int> brute_force_cutpoints(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!connected_after_deleting(g, {v})) out.push_back(v);
  return out;
}

}  // namespace planarcanon
