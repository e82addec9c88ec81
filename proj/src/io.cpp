#include "planarcanon/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace planarcanon {

namespace {

// Strips comments and yields non-blank lines.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    line.erase(end + 1);
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) fail(ErrorCode::ParseError, "empty graph file");
  std::istringstream head(lines[0]);
  std::string tag;
  int n = 0, m = 0;
  if (!(head >> tag >> n >> m) || tag != "p")
    fail(ErrorCode::ParseError, "expected header `p <n> <m>`");
  Graph g(n);
  int seen = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int u, v;
    if (!(ls >> tag >> u >> v) || tag != "e")
      fail(ErrorCode::ParseError, "expected edge line `e <u> <v>`");
    g.add_edge(u, v);  // rejects self-loops and duplicates
    ++seen;
  }
  if (seen != m)
    fail(ErrorCode::ParseError, "edge count does not match header");
  return g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

namespace {

std::vector<std::pair<int, std::vector<int>>> parse_neighbor_lines(
    const std::vector<std::string>& lines, std::vector<std::string>* extra) {
  std::vector<std::pair<int, std::vector<int>>> rows;
  for (const auto& line : lines) {
    if (!line.empty() && (line[0] == 'q' || line[0] == 'Q')) {
      if (extra) extra->push_back(line);
      else fail(ErrorCode::ParseError, "unexpected Q line in rotation file");
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::ParseError, "expected `v: n1 n2 ...` line");
    int v = 0;
    try {
      v = std::stoi(line.substr(0, colon));
    } catch (...) {
      fail(ErrorCode::ParseError, "bad vertex id in rotation line");
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<int> nbrs;
    int x;
    while (rest >> x) nbrs.push_back(x);
    rows.emplace_back(v, std::move(nbrs));
  }
  return rows;
}

struct ParsedCycles {
  Graph g;
  std::vector<std::vector<int>> cycles;
};

ParsedCycles cycles_from_rows(std::vector<std::pair<int, std::vector<int>>> rows) {
  if (rows.empty()) fail(ErrorCode::ParseError, "empty rotation file");
  int n = 0;
  for (auto& [v, nbrs] : rows) n = std::max(n, v + 1);
  std::vector<std::vector<int>> cycles(n);
  std::vector<char> present(n, 0);
  for (auto& [v, nbrs] : rows) {
    if (v < 0 || present[v])
      fail(ErrorCode::ParseError, "vertex listed twice or negative");
    present[v] = 1;
    cycles[v] = nbrs;
  }
  for (int v = 0; v < n; ++v)
    if (!present[v])
      fail(ErrorCode::ParseError, "missing rotation line for vertex " +
                                       std::to_string(v));
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = cycles[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::ParseError,
           "neighbor list of " + std::to_string(v) + " is not a permutation");
    for (int w : cycles[v]) {
      if (w < 0 || w >= n || w == v)
        fail(ErrorCode::ParseError, "bad neighbor id in rotation file");
      if (w > v) {
        // Edge added once; symmetry verified below.
        if (!g.has_edge(v, w)) g.add_edge(v, w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(cycles[v].size()) != g.degree(v))
      fail(ErrorCode::ParseError,
           "neighbor lists are not symmetric at vertex " + std::to_string(v));
  }
  return {std::move(g), std::move(cycles)};
}

}  // namespace

RotationSystem parse_rotation(std::istream& in) {
  auto rows = parse_neighbor_lines(content_lines(in), nullptr);
  auto parsed = cycles_from_rows(std::move(rows));
  return RotationSystem::from_cycles(std::move(parsed.g), parsed.cycles);
}

RotationSystem parse_rotation_string(const std::string& text) {
  std::istringstream in(text);
  return parse_rotation(in);
}

void write_rotation(std::ostream& out, const RotationSystem& r) {
  const Graph& g = r.graph();
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v << ":";
    if (g.degree(v) > 0)
      for (int w : r.cycle_from(v, g.neighbors(v)[0])) out << " " << w;
    out << "\n";
  }
}

std::string rotation_to_string(const RotationSystem& r) {
  std::ostringstream out;
  write_rotation(out, r);
  return out.str();
}

LayoutSystem parse_layout(std::istream& in) {
  std::vector<std::string> qlines;
  auto rows = parse_neighbor_lines(content_lines(in), &qlines);
  auto parsed = cycles_from_rows(std::move(rows));
  const Graph& g = parsed.g;
  std::vector<std::vector<std::array<int, 2>>> cyc(g.vertex_count());
  for (int a = 0; a < g.vertex_count(); ++a) {
    const auto& cy = parsed.cycles[a];
    const int d = static_cast<int>(cy.size());
    cyc[a].assign(d, {});
    for (int i = 0; i < d; ++i) {
      std::array<int, 2> nb{cy[(i + d - 1) % d], cy[(i + 1) % d]};
      std::sort(nb.begin(), nb.end());
      auto nbrs = g.neighbors(a);
      int idx = static_cast<int>(
          std::lower_bound(nbrs.begin(), nbrs.end(), cy[i]) - nbrs.begin());
      cyc[a][idx] = nb;
    }
  }
  std::set<std::array<int, 4>> quads;
  for (const auto& line : qlines) {
    std::istringstream ls(line);
    std::string tag;
    int b1, a1, a2, b2;
    if (!(ls >> tag >> b1 >> a1 >> a2 >> b2))
      fail(ErrorCode::ParseError, "expected `q b1 a1 a2 b2` line");
    quads.insert(LayoutSystem::canonical_quad(b1, a1, a2, b2));
  }
  return LayoutSystem(g, std::move(cyc), std::move(quads));
}

LayoutSystem parse_layout_string(const std::string& text) {
  std::istringstream in(text);
  return parse_layout(in);
}

void write_layout(std::ostream& out, const LayoutSystem& l) {
  const Graph& g = l.graph();
  for (int a = 0; a < g.vertex_count(); ++a) {
    out << a << ":";
    // Walk the undirected cycle from the smallest neighbor toward the
    // smaller of its two cyc-neighbors.
    int start = g.neighbors(a)[0];
    auto nb = l.cyc_neighbors(a, start);
    int prev = start, cur = std::min(nb[0], nb[1]);
    out << " " << start;
    for (int i = 1; i < g.degree(a); ++i) {
      out << " " << cur;
      auto cn = l.cyc_neighbors(a, cur);
      int next = (cn[0] == prev) ? cn[1] : cn[0];
      prev = cur;
      cur = next;
    }
    out << "\n";
  }
  for (const auto& q : l.quads())
    out << "q " << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
}

std::string layout_to_string(const LayoutSystem& l) {
  std::ostringstream out;
  write_layout(out, l);
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_graph(in);
}

RotationSystem load_rotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_rotation(in);
}

}  // namespace planarcanon
