#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "coxbuild/gf2.hpp"
#include "coxbuild/incidence.hpp"

using namespace coxbuild;

TEST_CASE("subspaces over the two-element field", "[geometry]") {
  using f2::Subspace;
  SECTION("echelon form is canonical") {
    REQUIRE(Subspace({1, 2}) == Subspace({3, 2}));
    REQUIRE(Subspace({1, 2}) == Subspace({3, 1}));
    REQUIRE(Subspace({5, 3}) != Subspace({5, 2}));
    REQUIRE(Subspace({0}).dim() == 0);
    REQUIRE(Subspace({7, 7, 7}).dim() == 1);
  }
  SECTION("membership, sums, elements") {
    Subspace u({0b0011, 0b0101});
    REQUIRE(u.dim() == 2);
    REQUIRE(u.contains(0b0110));
    REQUIRE(!u.contains(0b1000));
    REQUIRE(u.elements().size() == 4);
    Subspace sum = u.sum(Subspace({0b1000}));
    REQUIRE(sum.dim() == 3);
    REQUIRE(sum.contains(u));
    REQUIRE(!u.contains(sum));
  }
}

TEST_CASE("symplectic space over F2", "[geometry]") {
  f2::SymplecticSpace sp(2);
  REQUIRE(sp.dim() == 4);

  SECTION("form pairs coordinate i with i+2") {
    REQUIRE(sp.form(0b0001, 0b0100));
    REQUIRE(sp.form(0b0010, 0b1000));
    REQUIRE(!sp.form(0b0001, 0b0010));
    REQUIRE(!sp.form(0b0001, 0b1000));
    for (f2::Vec v = 0; v <= sp.full_mask(); ++v) REQUIRE(!sp.form(v, v));
    for (f2::Vec u = 0; u <= sp.full_mask(); ++u)
      for (f2::Vec v = 0; v <= sp.full_mask(); ++v)
        REQUIRE(sp.form(u, v) == sp.form(v, u));  // alternating = symmetric here
  }
  SECTION("nondegeneracy") {
    for (f2::Vec v = 1; v <= sp.full_mask(); ++v) {
      bool paired = false;
      for (f2::Vec u = 1; u <= sp.full_mask() && !paired; ++u)
        paired = sp.form(v, u);
      REQUIRE(paired);
    }
  }
  SECTION("subspace counts in dimension four") {
    REQUIRE(sp.subspaces_of_dim(1).size() == 15);
    REQUIRE(sp.subspaces_of_dim(2).size() == 35);
    REQUIRE(sp.subspaces_of_dim(3).size() == 15);
    std::set<f2::Subspace> dedup;
    for (const auto& s : sp.subspaces_of_dim(2)) dedup.insert(s);
    REQUIRE(dedup.size() == 35);
  }
  SECTION("isotropic planes and orthogonality") {
    std::size_t isotropic = 0;
    for (const auto& plane : sp.subspaces_of_dim(2)) {
      if (sp.is_isotropic(plane)) ++isotropic;
      f2::Subspace perp = sp.orthogonal(plane);
      REQUIRE(perp.dim() == 2);
      REQUIRE((perp == plane) == sp.is_isotropic(plane));
    }
    REQUIRE(isotropic == 15);
    for (const auto& line : sp.subspaces_of_dim(1))
      REQUIRE(sp.orthogonal(line).contains(line));  // every vector is isotropic
  }
  SECTION("transvections") {
    f2::Vec p = 0b0110;
    for (f2::Vec v = 0; v <= sp.full_mask(); ++v) {
      REQUIRE(sp.transvection(p, sp.transvection(p, v)) == v);
      for (f2::Vec u = 0; u <= sp.full_mask(); ++u)
        REQUIRE(sp.form(sp.transvection(p, u), sp.transvection(p, v)) ==
                sp.form(u, v));
      if (!sp.form(v, p)) REQUIRE(sp.transvection(p, v) == v);
      else REQUIRE(sp.transvection(p, v) == (v ^ p));
    }
  }
}

TEST_CASE("geometry text format", "[geometry]") {
  SECTION("round trip") {
    IncidenceGeometry g = fano_plane();
    std::ostringstream os;
    write_geometry(os, g);
    IncidenceGeometry back = parse_geometry(os.str());
    REQUIRE(back.point_labels == g.point_labels);
    REQUIRE(back.line_labels == g.line_labels);
    REQUIRE(back.flags == g.flags);
  }
  SECTION("comments and blank lines") {
    auto g = parse_geometry("# header\npoint a\n\nline L # inline\nflag a L\n");
    REQUIRE(g.num_points() == 1);
    REQUIRE(g.flags.size() == 1);
  }
  SECTION("errors carry line numbers") {
    CHECK_THROWS_WITH(parse_geometry("point a\npoint a\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_geometry("point a\nflag a L\n"),
                      Catch::Matchers::ContainsSubstring("unknown line"));
    CHECK_THROWS_WITH(parse_geometry("vertex a\n"),
                      Catch::Matchers::ContainsSubstring("unknown directive"));
    CHECK_THROWS_WITH(parse_geometry("point a b\n"),
                      Catch::Matchers::ContainsSubstring("trailing"));
    CHECK_THROWS_AS(parse_geometry("point a\nline L\nflag a L\nflag a L\n"),
                    ParseError);
  }
}

TEST_CASE("stock geometries and their metrics", "[geometry]") {
  SECTION("seven-point plane") {
    IncidenceGeometry g = fano_plane();
    REQUIRE(g.num_points() == 7);
    REQUIRE(g.num_lines() == 7);
    REQUIRE(g.flags.size() == 21);
    for (const auto& lines : g.lines_of_point()) REQUIRE(lines.size() == 3);
    for (const auto& pts : g.points_of_line()) REQUIRE(pts.size() == 3);
    auto m = incidence_graph_metrics(g);
    REQUIRE(m.connected);
    REQUIRE(m.girth == 6);
    REQUIRE(m.diameter == 3);
  }
  SECTION("ordinary polygons") {
    for (std::size_t m : {2, 3, 4, 6}) {
      auto metrics = incidence_graph_metrics(cycle_geometry(m));
      REQUIRE(metrics.connected);
      REQUIRE(metrics.girth == 2 * m);
      REQUIRE(metrics.diameter == m);
    }
  }
  SECTION("symplectic quadrangle") {
    QuadrangleF2 q = symplectic_quadrangle_f2();
    REQUIRE(q.geom.num_points() == 15);
    REQUIRE(q.geom.num_lines() == 15);
    REQUIRE(q.geom.flags.size() == 45);
    for (const auto& lines : q.geom.lines_of_point()) REQUIRE(lines.size() == 3);
    for (const auto& pts : q.geom.points_of_line()) REQUIRE(pts.size() == 3);
    auto m = incidence_graph_metrics(q.geom);
    REQUIRE(m.connected);
    REQUIRE(m.girth == 8);
    REQUIRE(m.diameter == 4);
  }
  SECTION("forest has no girth") {
    auto g = parse_geometry("point a\npoint b\nline L\nflag a L\nflag b L\n");
    auto m = incidence_graph_metrics(g);
    REQUIRE(!m.girth.has_value());
    REQUIRE(m.connected);
  }
  SECTION("disconnected geometry") {
    auto g = parse_geometry("point a\npoint b\nline L\nline M\nflag a L\nflag b M\n");
    REQUIRE(!incidence_graph_metrics(g).connected);
  }
}

TEST_CASE("point and line maps of the stock geometries", "[geometry]") {
  SECTION("cyclic shift of the seven-point plane preserves flags") {
    IncidenceGeometry g = fano_plane();
    PointLineMaps m = fano_shift_maps();
    std::set<std::pair<std::size_t, std::size_t>> flags(g.flags.begin(), g.flags.end());
    for (auto [p, l] : g.flags)
      REQUIRE(flags.count({m.point_map[p], m.line_map[l]}) == 1);
  }
  SECTION("central elation fixes the perp of its center") {
    QuadrangleF2 q = symplectic_quadrangle_f2();
    f2::Vec center = 0b0001;
    PointLineMaps m = central_elation_maps(q, center);
    std::set<std::size_t> images(m.point_map.begin(), m.point_map.end());
    REQUIRE(images.size() == 15);  // permutation
    std::size_t fixed = 0, moved = 0;
    for (std::size_t i = 0; i < q.point_vecs.size(); ++i) {
      bool perp = !q.space.form(q.point_vecs[i], center);
      if (perp) {
        REQUIRE(m.point_map[i] == i);
        ++fixed;
      } else {
        REQUIRE(m.point_map[i] != i);
        ++moved;
      }
    }
    REQUIRE(fixed == 7);  // center, plus six more points of its perp
    REQUIRE(moved == 8);
    std::set<std::pair<std::size_t, std::size_t>> flags(q.geom.flags.begin(),
                                                        q.geom.flags.end());
    for (auto [p, l] : q.geom.flags)
      REQUIRE(flags.count({m.point_map[p], m.line_map[l]}) == 1);
  }
}

TEST_CASE("vertex balls and distances", "[geometry]") {
  IncidenceGeometry g = fano_plane();
  GeomVertex p0{false, 0};
  REQUIRE(vertex_distance(g, p0, p0) == 0);
  REQUIRE(vertex_distance(g, p0, GeomVertex{true, 0}) == 1);   // p0 on l0
  REQUIRE(vertex_distance(g, p0, GeomVertex{false, 1}) == 2);  // collinear
  auto ball1 = vertex_ball(g, p0, 1);
  REQUIRE(ball1.size() == 4);  // the point and its three lines
  auto ball3 = vertex_ball(g, p0, 3);
  REQUIRE(ball3.size() == 14);  // whole incidence graph
}
