#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "planarcanon/rotation.hpp"

namespace planarcanon {

enum class ConfigKind { X, H };

// Labeled 5- or 6-vertex pattern: X uses w,x,y,u,v with the uniform z = w
// convention; H additionally has z adjacent to w with x,y in Gamma(z) and
// u,v in Gamma(w).
struct Configuration {
  ConfigKind kind;
  int x, y, z, u, v, w;

  static Configuration x_config(int w, int x, int y, int u, int v);
  static Configuration h_config(int z, int w, int x, int y, int u, int v);

  std::vector<int> vertices() const;  // labeled vertices, deduplicated
  void validate(const Graph& g) const;
};

enum class ConfigClass { collocated, twisted, neither };

ConfigClass classify_configuration(const RotationSystem& r, const Configuration& c);

// d0 / S0 cache for one configuration: distances of paths whose inner
// vertices avoid the configuration. d0 need not satisfy the triangle
// inequality; d0(a,a) = 0 and symmetry hold.
class GeodesicSystem {
 public:
  GeodesicSystem(const Graph& g, const Configuration& c);

  const Graph& graph() const { return *g_; }
  const Configuration& config() const { return c_; }

  Dist d0(int a, int b) const;
  bool in_avoid_set(int v) const;
  // S0(a,b): vertices lying on at least one d0-geodesic.
  std::vector<int> support(int a, int b) const;
  // Script-S0(a,b): full geodesic enumeration (the oracle).
  std::vector<PathSeq> geodesics(int a, int b) const;

 private:
  const Graph* g_;
  Configuration c_;
  std::vector<int> avoid_;
  std::vector<std::vector<Dist>> dist_;  // dist_[src][v]
};

struct BoundaryPair {
  PathSeq b1, b2;
  bool singleton = false;
};

enum class SidePair { XU, YV };
enum class ConfigSide { x, y, u, v };

struct SpecialVertices {
  int z1, x1, y1, w1, u1, v1;
  bool twisted_variant = false;
};

struct EssentialDecomposition {
  std::vector<int> cutpoints;               // e_1..e_l, d0(z1, e_i) increasing
  std::vector<std::vector<int>> segments;   // H_0..H_l vertex sets, sorted
};

struct ChainStep {
  int c, a, b;
  PathSeq path;        // one external witness path
  bool x_external;     // side of the chosen witness
  int route_choices;   // number of distinct external routes between a and b
};

struct ExternalChain {
  std::vector<ChainStep> steps;  // m = steps.size()
};

// Face-cut region oracle: a simple cycle of a sphere embedding splits the
// face set in two; vertex membership in the closed regions is decided
// combinatorially.
class SphereRegions {
 public:
  SphereRegions(const RotationSystem& r, const FaceSet& f,
                const std::vector<int>& cycle);

  bool on_cycle(int v) const;
  int side(int v) const;  // 0 or 1; -1 when on the cycle
  bool in_closed_region(int v, int s) const;

 private:
  std::vector<char> on_cycle_;
  std::vector<int> side_;
};

// Bundles an embedded graph with one configuration and exposes the boundary,
// special-vertex, entrance, essential-cutpoint and external-chain machinery.
class LocalGeometry {
 public:
  LocalGeometry(const RotationSystem& r, const Configuration& c);

  const RotationSystem& rotation() const { return *r_; }
  const Configuration& config() const { return c_; }
  const GeodesicSystem& geo() const { return geo_; }
  const FaceSet& face_set() const { return faces_; }
  ConfigClass cls() const { return cls_; }

  // Endpoints of the designated pair: (x,u) or (y,v).
  std::pair<int, int> pair_ends(SidePair p) const;

  // Boundaries of script-S0(s,t) where s and t lie on a common geodesic of
  // the given pair system, s nearer to the x (resp. y) end.
  BoundaryPair boundaries(SidePair p, int s, int t) const;

  SpecialVertices special_vertices() const;
  std::vector<int> entrances(ConfigSide side) const;
  EssentialDecomposition essential_decomposition() const;
  ExternalChain external_chain() const;

  // x-side / y-side of H as vertex sets (twisted variant uses the composite
  // boundary segments).
  std::vector<int> side_vertices(bool x_side) const;
  std::vector<int> h_vertices() const;  // S0(x,u) union S0(y,v), sorted

 private:
  BoundaryPair pair_boundaries(SidePair p) const;
  std::vector<int> closing_cycle(SidePair p, int s, int t,
                                 const PathSeq& mid) const;

  const RotationSystem* r_;
  Configuration c_;
  GeodesicSystem geo_;
  FaceSet faces_;
  ConfigClass cls_;
  mutable std::map<std::pair<int, int>, BoundaryPair> bcache_[2];
};

// Spec-level convenience wrappers.
GeodesicSystem d0_all_pairs(const Graph& g, const Configuration& c);
BoundaryPair boundaries(const RotationSystem& r, const Configuration& c, int s, int t);
SpecialVertices special_vertices(const RotationSystem& r, const Configuration& c);
std::vector<int> entrances(const RotationSystem& r, const Configuration& c, ConfigSide side);
EssentialDecomposition essential_decomposition(const RotationSystem& r, const Configuration& c);
ExternalChain external_chain(const RotationSystem& r, const Configuration& c);

// All X- (and H-) configurations of an embedded graph, in deterministic
// order. Configurations are emitted with every labeling of the neighbor
// choices; callers typically filter by classify_configuration.
std::vector<Configuration> enumerate_x_configurations(const Graph& g);
std::vector<Configuration> enumerate_h_configurations(const Graph& g);

}  // namespace planarcanon
