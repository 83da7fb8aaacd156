#pragma once

// Point-line incidence geometries: a small text format, stock examples
// (ordinary polygons, the seven-point plane, the symplectic quadrangle
// over F_2), and bipartite incidence-graph metrics used to certify the
// generalized-polygon axioms.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxbuild/coxeter.hpp"
#include "coxbuild/gf2.hpp"

namespace coxbuild {

struct IncidenceGeometry {
  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;
  std::vector<std::pair<std::size_t, std::size_t>> flags;  // (point, line)

  std::size_t num_points() const { return point_labels.size(); }
  std::size_t num_lines() const { return line_labels.size(); }

  std::vector<std::vector<std::size_t>> lines_of_point() const {
    std::vector<std::vector<std::size_t>> out(num_points());
    for (auto [p, l] : flags) out[p].push_back(l);
    return out;
  }
  std::vector<std::vector<std::size_t>> points_of_line() const {
    std::vector<std::vector<std::size_t>> out(num_lines());
    for (auto [p, l] : flags) out[l].push_back(p);
    return out;
  }
};

// ----- text format -----
//
//   # comment
//   point <label>
//   line <label>
//   flag <point-label> <line-label>

inline IncidenceGeometry parse_geometry(std::istream& in) {
  IncidenceGeometry g;
  std::map<std::string, std::size_t> points, lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("geometry line " + std::to_string(lineno) + ": " + msg);
    };
    if (kind == "point" || kind == "line") {
      std::string label, extra;
      if (!(ss >> label)) fail("missing label");
      if (ss >> extra) fail("trailing token '" + extra + "'");
      auto& index = kind == "point" ? points : lines;
      auto& labels = kind == "point" ? g.point_labels : g.line_labels;
      if (!index.emplace(label, labels.size()).second)
        fail("duplicate " + kind + " '" + label + "'");
      labels.push_back(label);
    } else if (kind == "flag") {
      std::string p, l, extra;
      if (!(ss >> p >> l)) fail("flag needs a point and a line");
      if (ss >> extra) fail("trailing token '" + extra + "'");
      auto pi = points.find(p);
      if (pi == points.end()) fail("unknown point '" + p + "'");
      auto li = lines.find(l);
      if (li == lines.end()) fail("unknown line '" + l + "'");
      g.flags.emplace_back(pi->second, li->second);
    } else {
      fail("unknown directive '" + kind + "'");
    }
  }
  std::sort(g.flags.begin(), g.flags.end());
  if (std::adjacent_find(g.flags.begin(), g.flags.end()) != g.flags.end())
    throw ParseError("duplicate flag in geometry");
  return g;
}

inline IncidenceGeometry parse_geometry(const std::string& text) {
  std::istringstream ss(text);
  return parse_geometry(ss);
}

inline IncidenceGeometry load_geometry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open geometry file '" + path + "'");
  return parse_geometry(in);
}

inline void write_geometry(std::ostream& os, const IncidenceGeometry& g) {
  for (const auto& p : g.point_labels) os << "point " << p << "\n";
  for (const auto& l : g.line_labels) os << "line " << l << "\n";
  for (auto [p, l] : g.flags)
    os << "flag " << g.point_labels[p] << " " << g.line_labels[l] << "\n";
}

// ----- stock geometries -----

// Seven points, seven lines; line i carries points i, i+1, i+3 (mod 7).
inline IncidenceGeometry fano_plane() {
  IncidenceGeometry g;
  for (int i = 0; i < 7; ++i) g.point_labels.push_back("p" + std::to_string(i));
  for (int i = 0; i < 7; ++i) g.line_labels.push_back("l" + std::to_string(i));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t d : {0, 1, 3}) g.flags.emplace_back((i + d) % 7, i);
  std::sort(g.flags.begin(), g.flags.end());
  return g;
}

// The ordinary m-gon: incidence graph a cycle of length 2m.
inline IncidenceGeometry cycle_geometry(std::size_t m) {
  if (m < 2) throw PreconditionError("ordinary polygon needs m >= 2");
  IncidenceGeometry g;
  for (std::size_t i = 0; i < m; ++i) {
    g.point_labels.push_back("p" + std::to_string(i));
    g.line_labels.push_back("l" + std::to_string(i));
  }
  for (std::size_t i = 0; i < m; ++i) {
    g.flags.emplace_back(i, i);
    g.flags.emplace_back((i + 1) % m, i);
  }
  std::sort(g.flags.begin(), g.flags.end());
  return g;
}

// The symplectic quadrangle over F_2: points are the 15 nonzero vectors of
// F_2^4, lines the 15 totally isotropic planes, each carrying its 3 nonzero
// vectors. Keeps the coordinate data so collineations can be built from
// linear maps.
struct QuadrangleF2 {
  f2::SymplecticSpace space{2};
  IncidenceGeometry geom;
  std::vector<f2::Vec> point_vecs;         // index -> vector
  std::vector<f2::Subspace> line_spaces;   // index -> plane
  std::map<f2::Vec, std::size_t> point_index;
  std::map<f2::Subspace, std::size_t> line_index;
};

inline QuadrangleF2 symplectic_quadrangle_f2() {
  QuadrangleF2 q;
  for (f2::Vec v = 1; v <= q.space.full_mask(); ++v) {
    q.point_index[v] = q.point_vecs.size();
    q.point_vecs.push_back(v);
    q.geom.point_labels.push_back(f2::vec_label(v, q.space.dim()));
  }
  for (const f2::Subspace& plane : q.space.subspaces_of_dim(2)) {
    if (!q.space.is_isotropic(plane)) continue;
    std::size_t li = q.line_spaces.size();
    q.line_index[plane] = li;
    q.line_spaces.push_back(plane);
    std::string label;
    for (f2::Vec v : plane.elements()) {
      if (v == 0) continue;
      if (!label.empty()) label += "+";
      label += f2::vec_label(v, q.space.dim());
      q.geom.flags.emplace_back(q.point_index.at(v), li);
    }
    q.geom.line_labels.push_back("{" + label + "}");
  }
  std::sort(q.geom.flags.begin(), q.geom.flags.end());
  return q;
}

// ----- point/line maps of the stock geometries -----

struct PointLineMaps {
  std::vector<std::size_t> point_map;
  std::vector<std::size_t> line_map;
};

// The cyclic collineation p_i -> p_{i+1} of the seven-point plane; it
// carries line i to line i+1.
inline PointLineMaps fano_shift_maps() {
  PointLineMaps m;
  for (std::size_t i = 0; i < 7; ++i) {
    m.point_map.push_back((i + 1) % 7);
    m.line_map.push_back((i + 1) % 7);
  }
  return m;
}

// Collineation of the symplectic quadrangle induced by the transvection
// v -> v + B(v, p) p; it fixes p-perp pointwise.
inline PointLineMaps central_elation_maps(const QuadrangleF2& q, f2::Vec center) {
  if (center == 0 || center > q.space.full_mask())
    throw PreconditionError("elation center must be a nonzero vector");
  PointLineMaps m;
  for (f2::Vec v : q.point_vecs)
    m.point_map.push_back(q.point_index.at(q.space.transvection(center, v)));
  for (const f2::Subspace& plane : q.line_spaces) {
    std::vector<f2::Vec> image;
    for (f2::Vec v : plane.basis()) image.push_back(q.space.transvection(center, v));
    m.line_map.push_back(q.line_index.at(f2::Subspace(image)));
  }
  return m;
}

// ----- incidence-graph metrics -----

struct GeomVertex {
  bool is_line = false;
  std::size_t index = 0;
  friend auto operator<=>(const GeomVertex&, const GeomVertex&) = default;
};

struct IncidenceGraphMetrics {
  bool connected = false;
  std::optional<std::size_t> girth;  // empty if the graph is a forest
  std::size_t diameter = 0;          // meaningful only when connected
};

namespace detail {

inline std::vector<std::vector<std::size_t>> incidence_adjacency(
    const IncidenceGeometry& g) {
  // Vertices 0..P-1 points, P..P+L-1 lines.
  std::vector<std::vector<std::size_t>> adj(g.num_points() + g.num_lines());
  for (auto [p, l] : g.flags) {
    adj[p].push_back(g.num_points() + l);
    adj[g.num_points() + l].push_back(p);
  }
  return adj;
}

inline std::vector<std::size_t> bfs_depths(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t src) {
  std::vector<std::size_t> depth(adj.size(), SIZE_MAX);
  std::deque<std::size_t> queue{src};
  depth[src] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u])
      if (depth[v] == SIZE_MAX) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
  }
  return depth;
}

}  // namespace detail

inline IncidenceGraphMetrics incidence_graph_metrics(const IncidenceGeometry& g) {
  auto adj = detail::incidence_adjacency(g);
  IncidenceGraphMetrics m;
  if (adj.empty()) return m;
  m.connected = true;

  // Girth: for each root, BFS with parent edges; the first non-tree edge
  // seen closes a shortest cycle through the root.
  std::size_t girth = SIZE_MAX;
  for (std::size_t root = 0; root < adj.size(); ++root) {
    std::vector<std::size_t> depth(adj.size(), SIZE_MAX), parent(adj.size(), SIZE_MAX);
    std::deque<std::size_t> queue{root};
    depth[root] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (v == parent[u]) continue;
        if (depth[v] == SIZE_MAX) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else {
          girth = std::min(girth, depth[u] + depth[v] + 1);
        }
      }
    }
  }
  if (girth != SIZE_MAX) m.girth = girth;

  for (std::size_t src = 0; src < adj.size(); ++src) {
    for (std::size_t d : detail::bfs_depths(adj, src)) {
      if (d == SIZE_MAX) {
        m.connected = false;
      } else {
        m.diameter = std::max(m.diameter, d);
      }
    }
  }
  return m;
}

inline std::size_t vertex_distance(const IncidenceGeometry& g, GeomVertex a,
                                   GeomVertex b) {
  auto adj = detail::incidence_adjacency(g);
  std::size_t va = (a.is_line ? g.num_points() : 0) + a.index;
  std::size_t vb = (b.is_line ? g.num_points() : 0) + b.index;
  std::size_t d = detail::bfs_depths(adj, va).at(vb);
  if (d == SIZE_MAX) throw PreconditionError("vertices in different components");
  return d;
}

inline std::vector<GeomVertex> vertex_ball(const IncidenceGeometry& g, GeomVertex c,
                                           std::size_t radius) {
  auto adj = detail::incidence_adjacency(g);
  std::size_t vc = (c.is_line ? g.num_points() : 0) + c.index;
  auto depth = detail::bfs_depths(adj, vc);
  std::vector<GeomVertex> out;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (depth[v] <= radius)
      out.push_back(v < g.num_points() ? GeomVertex{false, v}
                                       : GeomVertex{true, v - g.num_points()});
  return out;
}

}  // namespace coxbuild
