#pragma once

#include <cstdint>
#include <vector>

#include "planarcanon/graph.hpp"

namespace planarcanon {

// Color assignment over vertices (arity 1) or ordered k-tuples (arity k).
// Color ids are dense, rounds count refinement iterations.
struct Coloring {
  int arity = 1;
  std::vector<int> color;  // indexed by vertex, or tuple rank in base n
  int stabilization_round = 0;
  int color_count = 0;

  std::vector<std::pair<int, int>> histogram() const;  // (color, count), sorted
};

struct WlOptions {
  bool count_free = false;        // set semantics instead of multiset
  std::int64_t tuple_cap = 10'000'000;  // guard on n^k per graph
};

Coloring wl1(const Graph& g, int rmax);
Coloring wlk(const Graph& g, int k, int rmax, const WlOptions& opt = {});

struct WlVerdict {
  bool distinguished = false;
  int round = 0;       // first differing round, or round of joint stability
  std::vector<std::size_t> histogram_sizes;  // class counts per graph at end
};

// Joint refinement of both graphs under a shared color dictionary.
WlVerdict wl_distinguish(const Graph& g, const Graph& h, int k, int rmax,
                         const WlOptions& opt = {});

}  // namespace planarcanon
