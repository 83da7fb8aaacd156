#pragma once

// Rank-2 buildings from point-line geometries: chambers are flags, two
// flags sharing a line are adjacent of the first kind ("s"), two sharing a
// point of the second ("t"). A geometry qualifies when its incidence graph
// is connected with diameter m and girth 2m; the unchecked constructor
// skips that test so broken inputs can be fed to the validator on purpose.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxbuild/building.hpp"
#include "coxbuild/incidence.hpp"

namespace coxbuild {

class MgonBuilding : public FiniteBuilding {
 public:
  static MgonBuilding from_geometry(IncidenceGeometry g) {
    auto metrics = incidence_graph_metrics(g);
    if (!metrics.connected)
      throw PreconditionError("incidence graph is not connected");
    if (!metrics.girth)
      throw PreconditionError("incidence graph has no cycle");
    if (*metrics.girth != 2 * metrics.diameter || metrics.diameter < 2)
      throw PreconditionError(
          "incidence graph is not a generalized polygon: girth " +
          std::to_string(*metrics.girth) + ", diameter " +
          std::to_string(metrics.diameter));
    return MgonBuilding(std::move(g), metrics.diameter);
  }

  // No polygon axioms checked; metric data may be incoherent.
  static MgonBuilding from_geometry_unchecked(IncidenceGeometry g, std::size_t m) {
    return MgonBuilding(std::move(g), m);
  }

  std::size_t gon() const { return m_; }
  const IncidenceGeometry& geometry() const { return geom_; }

  std::pair<std::size_t, std::size_t> flag_of(ChamberId c) const {
    return geom_.flags.at(c);
  }

  ChamberId chamber_of_flag(std::size_t p, std::size_t l) const {
    auto it = std::lower_bound(geom_.flags.begin(), geom_.flags.end(),
                               std::make_pair(p, l));
    if (it == geom_.flags.end() || *it != std::make_pair(p, l))
      throw PreconditionError("(" + geom_.point_labels.at(p) + ", " +
                              geom_.line_labels.at(l) + ") is not a flag");
    return static_cast<ChamberId>(it - geom_.flags.begin());
  }

  std::string chamber_label(ChamberId c) const override {
    auto [p, l] = flag_of(c);
    return "(" + geom_.point_labels[p] + ", " + geom_.line_labels[l] + ")";
  }

  // Point and line permutations that preserve incidence induce a
  // type-preserving automorphism.
  BuildingAutomorphism collineation(std::string name, PointLineMaps maps) const {
    check_permutation(maps.point_map, geom_.num_points(), "point");
    check_permutation(maps.line_map, geom_.num_lines(), "line");
    std::vector<ChamberId> images = flag_images(
        [&](std::size_t p, std::size_t l) {
          return std::make_pair(maps.point_map[p], maps.line_map[l]);
        });
    return {std::move(name), {0, 1},
            [images = std::move(images)](ChamberId c) { return images.at(c); }};
  }

  // A correlation swapping points with lines; the flag (p, l) goes to
  // (image of l, image of p). Type-reversing.
  BuildingAutomorphism duality(std::string name, std::vector<std::size_t> point_to_line,
                               std::vector<std::size_t> line_to_point) const {
    if (geom_.num_points() != geom_.num_lines())
      throw PreconditionError("a duality needs equally many points and lines");
    check_permutation(point_to_line, geom_.num_points(), "point-to-line");
    check_permutation(line_to_point, geom_.num_lines(), "line-to-point");
    std::vector<ChamberId> images = flag_images(
        [&](std::size_t p, std::size_t l) {
          return std::make_pair(line_to_point[l], point_to_line[p]);
        });
    return {std::move(name), {1, 0},
            [images = std::move(images)](ChamberId c) { return images.at(c); }};
  }

 private:
  MgonBuilding(IncidenceGeometry g, std::size_t m)
      : FiniteBuilding(make_dihedral(MOrder::finite(static_cast<unsigned>(m))),
                       "polygon"),
        geom_(std::move(g)),
        m_(m) {
    if (m < 2) throw PreconditionError("generalized polygon needs m >= 2");
    std::sort(geom_.flags.begin(), geom_.flags.end());
    std::vector<std::vector<ChamberId>> by_line(geom_.num_lines());
    std::vector<std::vector<ChamberId>> by_point(geom_.num_points());
    for (std::size_t i = 0; i < geom_.flags.size(); ++i) {
      auto [p, l] = geom_.flags[i];
      by_point[p].push_back(static_cast<ChamberId>(i));
      by_line[l].push_back(static_cast<ChamberId>(i));
    }
    std::erase_if(by_line, [](const auto& v) { return v.empty(); });
    std::erase_if(by_point, [](const auto& v) { return v.empty(); });
    init_panels(geom_.flags.size(), {std::move(by_line), std::move(by_point)});
  }

  static void check_permutation(const std::vector<std::size_t>& map, std::size_t n,
                                const std::string& what) {
    if (map.size() != n)
      throw PreconditionError(what + " map has wrong size");
    std::vector<bool> hit(n, false);
    for (std::size_t v : map) {
      if (v >= n || hit[v])
        throw PreconditionError(what + " map is not a bijection");
      hit[v] = true;
    }
  }

  template <typename F>
  std::vector<ChamberId> flag_images(F&& image_flag) const {
    std::vector<ChamberId> images;
    images.reserve(geom_.flags.size());
    for (auto [p, l] : geom_.flags) {
      auto [ip, il] = image_flag(p, l);
      if (!std::binary_search(geom_.flags.begin(), geom_.flags.end(),
                              std::make_pair(ip, il)))
        throw PreconditionError(
            "maps do not preserve incidence: flag (" + geom_.point_labels[p] +
            ", " + geom_.line_labels[l] + ") is carried to the non-flag (" +
            geom_.point_labels.at(ip) + ", " + geom_.line_labels.at(il) + ")");
      images.push_back(chamber_of_flag(ip, il));
    }
    return images;
  }

  IncidenceGeometry geom_;
  std::size_t m_;
};

// Deterministic search for an incidence-reversing vertex bijection of a
// connected geometry: points to lines and back, adjacency preserved.
// Returns the first one in candidate order, or nothing if none exists.
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_duality(const IncidenceGeometry& g) {
  const std::size_t P = g.num_points(), L = g.num_lines();
  if (P != L || P == 0) return std::nullopt;
  auto adj = detail::incidence_adjacency(g);
  const std::size_t N = P + L;

  // BFS order from vertex 0 so every later vertex has a mapped neighbor.
  std::vector<std::size_t> order, anchor(N, SIZE_MAX), depth(N, SIZE_MAX);
  order.reserve(N);
  std::deque<std::size_t> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (std::size_t v : adj[u])
      if (depth[v] == SIZE_MAX) {
        depth[v] = depth[u] + 1;
        anchor[v] = u;
        queue.push_back(v);
      }
  }
  if (order.size() != N) return std::nullopt;  // disconnected

  auto side = [&](std::size_t v) { return v < P; };  // true = point
  auto adjacent = [&](std::size_t u, std::size_t v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  };

  std::vector<std::size_t> img(N, SIZE_MAX);
  std::vector<bool> used(N, false);

  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == N) return true;
    std::size_t v = order[k];
    std::vector<std::size_t> candidates;
    if (anchor[v] == SIZE_MAX) {
      for (std::size_t c = 0; c < N; ++c)
        if (side(c) != side(v)) candidates.push_back(c);
    } else {
      candidates = adj[img[anchor[v]]];
    }
    for (std::size_t c : candidates) {
      if (used[c] || side(c) == side(v) || adj[c].size() != adj[v].size()) continue;
      bool ok = true;
      for (std::size_t u : adj[v])
        if (img[u] != SIZE_MAX && !adjacent(c, img[u])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      img[v] = c;
      used[c] = true;
      if (place(k + 1)) return true;
      img[v] = SIZE_MAX;
      used[c] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;

  std::vector<std::size_t> point_to_line(P), line_to_point(L);
  for (std::size_t p = 0; p < P; ++p) point_to_line[p] = img[p] - P;
  for (std::size_t l = 0; l < L; ++l) line_to_point[l] = img[P + l];
  return std::make_pair(std::move(point_to_line), std::move(line_to_point));
}

}  // namespace coxbuild
