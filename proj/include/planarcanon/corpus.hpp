#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planarcanon/graph.hpp"

namespace planarcanon {

// Named triconnected planar families. Generation is deterministic in
// (family, param, seed).
//   wheel(p)        rim cycle of length p >= 3 plus a hub       n = p+1
//   prism(p)        two p-cycles joined by rungs, p >= 3        n = 2p
//   antiprism(p)    two p-cycles joined by a zigzag band, p >= 3, n = 2p
//   platonic(name)  tetra | cube | octa | dodeca | icosa
//   stacked-triangulation(s, seed): s random face splits of K4,  n = 4+s
Graph generate(const std::string& family, int param, std::uint32_t seed);

struct CorpusEntry {
  std::string name;
  std::string family;
  int param = 0;
  std::uint32_t seed = 0;
  Graph graph;
};

struct Corpus {
  std::vector<CorpusEntry> entries;

  std::vector<const CorpusEntry*> with_max_n(int nmax) const;
};

// The standard instance set used by the check suites; nmax limits sizes,
// seed offsets the randomized families.
Corpus default_corpus(int nmax = 20, std::uint32_t seed = 1);

std::vector<int> random_permutation(int n, std::uint32_t seed);

}  // namespace planarcanon
