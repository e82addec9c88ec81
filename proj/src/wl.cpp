#include "planarcanon/wl.hpp"

#include <algorithm>
#include <map>

namespace planarcanon {

std::vector<std::pair<int, int>> Coloring::histogram() const {
  std::map<int, int> counts;
  for (int c : color) ++counts[c];
  return {counts.begin(), counts.end()};
}

namespace {

// Joint refinement over one or two graphs with a shared color dictionary.
struct JointWl {
  std::vector<const Graph*> gs;
  int k;
  WlOptions opt;
  std::vector<std::vector<int>> colors;  // per graph, per tuple rank
  std::vector<std::int64_t> tuple_count;
  int total_colors = 0;
  int round = 0;

  JointWl(std::vector<const Graph*> graphs, int kk, const WlOptions& o)
      : gs(std::move(graphs)), k(kk), opt(o) {
    if (k < 1) fail(ErrorCode::Precondition, "dimension must be >= 1");
    for (const Graph* g : gs) {
      std::int64_t cnt = 1;
      for (int i = 0; i < k; ++i) {
        cnt *= g->vertex_count();
        if (cnt > opt.tuple_cap)
          fail(ErrorCode::CapExceeded, "tuple space exceeds the cap");
      }
      tuple_count.push_back(cnt);
    }
    init();
  }

  void decode(int gi, std::int64_t rank, std::vector<int>& tup) const {
    const int n = gs[gi]->vertex_count();
    tup.resize(k);
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(rank % n);
      rank /= n;
    }
  }

  void init() {
    std::map<std::vector<int>, int> dict;
    colors.resize(gs.size());
    std::vector<int> tup, sig;
    for (size_t gi = 0; gi < gs.size(); ++gi) {
      colors[gi].resize(tuple_count[gi]);
      for (std::int64_t t = 0; t < tuple_count[gi]; ++t) {
        decode(static_cast<int>(gi), t, tup);
        sig.clear();
        if (k == 1) {
          sig.push_back(gs[gi]->degree(tup[0]));
        } else {
          // Ordered isomorphism type: equality pattern plus adjacency.
          for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
              sig.push_back(tup[i] == tup[j]);
              sig.push_back(gs[gi]->has_edge(tup[i], tup[j]) ? 1 : 0);
            }
        }
        auto [it, fresh] = dict.emplace(sig, static_cast<int>(dict.size()));
        (void)fresh;
        colors[gi][t] = it->second;
      }
    }
    total_colors = static_cast<int>(dict.size());
  }

  // One refinement round; returns true if the joint partition refined.
  bool step() {
    std::map<std::vector<int>, int> dict;
    std::vector<std::vector<int>> next(gs.size());
    std::vector<int> tup, sig;
    for (size_t gi = 0; gi < gs.size(); ++gi) {
      const Graph& g = *gs[gi];
      const int n = g.vertex_count();
      next[gi].resize(tuple_count[gi]);
      std::vector<std::int64_t> pow(k, 1);
      for (int i = k - 2; i >= 0; --i) pow[i] = pow[i + 1] * n;
      for (std::int64_t t = 0; t < tuple_count[gi]; ++t) {
        decode(static_cast<int>(gi), t, tup);
        sig.clear();
        sig.push_back(colors[gi][t]);
        if (k == 1) {
          std::vector<int> nb;
          for (int w : g.neighbors(tup[0])) nb.push_back(colors[gi][w]);
          std::sort(nb.begin(), nb.end());
          if (opt.count_free)
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
          sig.insert(sig.end(), nb.begin(), nb.end());
          sig.push_back(-1);
        } else {
          std::vector<std::vector<int>> subs;
          subs.reserve(n);
          for (int w = 0; w < n; ++w) {
            std::vector<int> vec(k);
            for (int pos = 0; pos < k; ++pos) {
              std::int64_t t2 = t + (static_cast<std::int64_t>(w) - tup[pos]) * pow[pos];
              vec[pos] = colors[gi][t2];
            }
            subs.push_back(std::move(vec));
          }
          std::sort(subs.begin(), subs.end());
          if (opt.count_free)
            subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
          for (const auto& vec : subs)
            sig.insert(sig.end(), vec.begin(), vec.end());
        }
        auto [it, fresh] = dict.emplace(sig, static_cast<int>(dict.size()));
        (void)fresh;
        next[gi][t] = it->second;
      }
    }
    const int new_total = static_cast<int>(dict.size());
    colors = std::move(next);
    ++round;
    const bool refined = new_total > total_colors;
    total_colors = new_total;
    return refined;
  }

  std::vector<std::pair<int, int>> histogram(int gi) const {
    std::map<int, int> counts;
    for (int c : colors[gi]) ++counts[c];
    return {counts.begin(), counts.end()};
  }
};

}  // namespace

Coloring wl1(const Graph& g, int rmax) {
  JointWl w({&g}, 1, {});
  int stable = rmax;
  for (int r = 0; r < rmax; ++r)
    if (!w.step()) {
      stable = r;  // the round-r coloring was already stable
      break;
    }
  Coloring out;
  out.arity = 1;
  out.color = w.colors[0];
  out.stabilization_round = stable;
  out.color_count = w.total_colors;
  return out;
}

Coloring wlk(const Graph& g, int k, int rmax, const WlOptions& opt) {
  if (k < 2) fail(ErrorCode::Precondition, "wlk needs k >= 2 (use wl1)");
  JointWl w({&g}, k, opt);
  int stable = rmax;
  for (int r = 0; r < rmax; ++r)
    if (!w.step()) {
      stable = r;
      break;
    }
  Coloring out;
  out.arity = k;
  out.color = w.colors[0];
  out.stabilization_round = stable;
  out.color_count = w.total_colors;
  return out;
}

WlVerdict wl_distinguish(const Graph& g, const Graph& h, int k, int rmax,
                         const WlOptions& opt) {
  JointWl w({&g, &h}, k, opt);
  WlVerdict out;
  for (int r = 0;; ++r) {
    if (w.histogram(0) != w.histogram(1)) {
      out.distinguished = true;
      out.round = r;
      break;
    }
    if (r >= rmax) {
      out.round = r;
      break;
    }
    if (!w.step()) {
      out.round = r;  // jointly stable with equal histograms
      break;
    }
  }
  out.histogram_sizes = {w.histogram(0).size(), w.histogram(1).size()};
  return out;
}

}  // namespace planarcanon
