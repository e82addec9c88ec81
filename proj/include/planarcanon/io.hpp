#pragma once

#include <iosfwd>
#include <string>

#include "planarcanon/graph.hpp"
#include "planarcanon/rotation.hpp"

namespace planarcanon {

// Graph text format: first line `p <n> <m>`, then m lines `e <u> <v>` with
// 0-indexed endpoints. Blank lines and `#` comments are ignored; duplicate
// or self-loop edges are a parse error.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

// Rotation text format: n lines, each `v: n1 n2 ... nd` listing Gamma(v) in
// clockwise succ order starting from the smallest neighbor id.
RotationSystem parse_rotation(std::istream& in);
RotationSystem parse_rotation_string(const std::string& text);
void write_rotation(std::ostream& out, const RotationSystem& r);
std::string rotation_to_string(const RotationSystem& r);

// Layout serialization: rotation-format cyclic orders (direction chosen
// deterministically) plus a Q section of lines `q b1 a1 a2 b2`.
LayoutSystem parse_layout(std::istream& in);
LayoutSystem parse_layout_string(const std::string& text);
void write_layout(std::ostream& out, const LayoutSystem& l);
std::string layout_to_string(const LayoutSystem& l);

Graph load_graph_file(const std::string& path);
RotationSystem load_rotation_file(const std::string& path);

}  // namespace planarcanon
