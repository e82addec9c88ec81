#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "planarcanon/graph.hpp"

namespace planarcanon {

struct RotationViolation {
  int vertex = -1;
  std::string reason;
};

// Graph plus the clockwise successor map succ_a : Gamma(a) -> Gamma(a) at
// every vertex. Construction accepts any succ pairs so that malformed input
// can be inspected; validate_rotation reports the first violation. All
// operational accessors require a well-shaped system (succ_a a permutation
// of Gamma(a)).
class RotationSystem {
 public:
  RotationSystem(Graph g, std::vector<std::vector<std::pair<int, int>>> succ_pairs);

  // cycles[v] lists Gamma(v) in clockwise order.
  static RotationSystem from_cycles(Graph g, const std::vector<std::vector<int>>& cycles);

  const Graph& graph() const { return g_; }
  bool shape_ok() const { return !shape_error_.has_value(); }
  const std::optional<RotationViolation>& shape_error() const { return shape_error_; }

  int succ(int a, int b) const;  // clockwise successor of b around a
  int pred(int a, int b) const;

  // Gamma(a) in succ order starting at `start`.
  std::vector<int> cycle_from(int a, int start) const;

  bool operator==(const RotationSystem& other) const;

 private:
  void require_shape() const;

  Graph g_;
  // Aligned with g_.neighbors(a): succ_idx_[a][i] = index (within the
  // neighbor list) of the successor of neighbors(a)[i]; valid iff shape ok.
  std::vector<std::vector<int>> succ_idx_;
  std::optional<RotationViolation> shape_error_;
};

// nullopt means the system satisfies both rotation-system axioms plus the
// minimum-degree-3 requirement.
std::optional<RotationViolation> validate_rotation(const RotationSystem& r);

RotationSystem conjugate(const RotationSystem& r);

// Closed walks of directed edges under the tracing rule: after (u,v) the
// walk continues with (v, succ_v(u)). Each directed edge lies in exactly
// one face.
struct FaceSet {
  std::vector<std::vector<int>> walks;  // vertex sequences, closed implicitly
  int total_directed_edges() const;
};

FaceSet faces(const RotationSystem& r);

// Euler characteristic V - E + F; equals 2 exactly on sphere embeddings.
int genus_check(const RotationSystem& r);

struct LayoutViolation {
  std::string reason;
  int vertex = -1;
};

// Graph plus undirected cyclic neighbor orders and facial-continuation
// quadruples Q. Quadruples are stored orientation-canonically:
// (b1,a1,a2,b2) and (b2,a2,a1,b1) are the same entry.
class LayoutSystem {
 public:
  LayoutSystem(Graph g,
               std::vector<std::vector<std::array<int, 2>>> cyc,
               std::set<std::array<int, 4>> quads);

  const Graph& graph() const { return g_; }
  // The two cyc-neighbors of b around a, sorted.
  std::array<int, 2> cyc_neighbors(int a, int b) const;
  bool quad(int b1, int a1, int a2, int b2) const;
  const std::set<std::array<int, 4>>& quads() const { return quads_; }

  static std::array<int, 4> canonical_quad(int b1, int a1, int a2, int b2);

  bool operator==(const LayoutSystem&) const = default;

 private:
  Graph g_;
  std::vector<std::vector<std::array<int, 2>>> cyc_;  // aligned with neighbors
  std::set<std::array<int, 4>> quads_;
};

std::optional<LayoutViolation> validate_layout(const LayoutSystem& l);

LayoutSystem layout_of(const RotationSystem& r);

struct LayoutInconsistency {
  // Two vertex paths from the seed whose orientation propagation disagrees
  // about the edge (edge_a, edge_b).
  int edge_a = -1, edge_b = -1;
  std::vector<int> path1, path2;
  std::string reason;
};

struct RotationPair {
  RotationSystem primary;
  RotationSystem conjugated;
};

using RotationsOfLayoutResult = std::variant<RotationPair, LayoutInconsistency>;

// Reconstructs {R, R*} from a layout by orienting a seed vertex and
// propagating across edges via Q.
RotationsOfLayoutResult rotations_of_layout(const LayoutSystem& l);

RotationSystem relabel(const RotationSystem& r, const std::vector<int>& perm);

}  // namespace planarcanon
