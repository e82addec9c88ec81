#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planarcanon/rotation.hpp"

namespace planarcanon {

// Position of z in the succ_x cycle counting from c_xy(y) = 0.
int local_coord(const RotationSystem& r, int x, int y, int z);

// Per-vertex coordinates C_ab(v) relative to the ordered origin edge (a,b):
// the lexicographic minimum, over all shortest a-v paths, of the sequence of
// local step coordinates. |C_ab(v)| = d(a,v) and v -> C_ab(v) is injective.
struct CoordinateCode {
  int origin_a = -1;
  int origin_b = -1;
  std::vector<std::vector<int>> coord;  // indexed by vertex
};

CoordinateCode global_coords(const RotationSystem& r, int a, int b);

// Recovers the extreme-left shortest path encoded by a coordinate sequence.
PathSeq decode_coordinate_path(const RotationSystem& r, int a, int b,
                               const std::vector<int>& code);

struct CanonicalForm {
  std::vector<std::uint8_t> code;
  int origin_a = -1;   // witness origin edge (original vertex ids)
  int origin_b = -1;
  bool conjugated = false;
};

// Canonical byte code of a rotation system: minimum over all ordered origin
// edges of the serialization of the coordinate-reindexed system. Equal codes
// iff the systems are isomorphic as structures <G,T>.
CanonicalForm canonical_code_rotation(const RotationSystem& r);

// Canonical code of a triconnected planar graph: the smaller of the codes of
// one embedding and its conjugate.
CanonicalForm canonical_code_graph(const Graph& g);

bool iso_graphs(const Graph& g, const Graph& h);

// Lowercase hex rendering with the format prefix.
std::string code_hex(const CanonicalForm& form);

}  // namespace planarcanon
