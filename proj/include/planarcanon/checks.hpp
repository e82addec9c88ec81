#pragma once

#include <functional>
#include <string>
#include <vector>

#include "planarcanon/corpus.hpp"
#include "planarcanon/coords.hpp"
#include "planarcanon/game.hpp"
#include "planarcanon/local_geometry.hpp"

namespace planarcanon {

struct SuiteOptions {
  int nmax = 12;
  std::uint32_t seed = 1;
  int threads = 0;  // 0 = PLANARCANON_THREADS or hardware default
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  long checked = 0;
  std::vector<std::string> failures;  // counterexample dumps, capped
  double seconds = 0.0;
};

// suite in {euler, laylay, coords, canon-vs-oracle, boundaries,
// twisted-intersection, blockpath, halving-bounds, wl-sweep,
// depth-envelopes}.
SuiteResult run_suite(const std::string& suite, const Corpus& corpus,
                      const SuiteOptions& opt = {});

std::vector<std::string> suite_names();

// Building blocks shared with the acceptance tests -------------------------

// Relabeling invariance of the graph canonical code (trials random perms).
SuiteResult check_relabel_invariance(const Corpus& corpus, int trials,
                                     const SuiteOptions& opt);

// Exhaustive small-instance enumerations.
std::vector<Graph> all_triconnected_planar_graphs(int n);        // up to iso
std::vector<RotationSystem> all_rotation_systems_up_to_iso(int n);

// Deterministic parallel map: applies fn to 0..count-1 honoring the thread
// cap; results are collected by index.
void parallel_for(long count, int threads,
                  const std::function<void(long)>& fn);
int resolve_thread_count(int requested);

}  // namespace planarcanon
