#pragma once

#include "planarcanon/graph.hpp"

namespace planarcanon {

// Independent brute-force oracles used by the check suites and tests. These
// deliberately avoid the canonical-code and flow paths they are used to
// verify.

// Permutation search with degree pruning; intended for n <= ~10.
bool brute_force_isomorphic(const Graph& g, const Graph& h);

// Deletes every vertex subset of size <= k-1 and tests connectivity.
bool brute_force_k_connected(const Graph& g, int k);

// Cutpoints by single-vertex deletion.
std::vector<int> brute_force_cutpoints(const Graph& g);

}  // namespace planarcanon
