#include <catch2/catch_amalgamated.hpp>

#include "coxbuild/displacement.hpp"
#include "coxbuild/tree_building.hpp"

using namespace coxbuild;

TEST_CASE("improvement step on the three-regular tree", "[displacement]") {
  TreeBuilding tree(2);
  BuildingAutomorphism phi = tree.subtree_swap("s", 0, 1);

  SECTION("first step from a displaced chamber is certified") {
    ChamberId c = tree.chamber("s0");
    REQUIRE(tree.system().format(tree.delta(c, phi.map(c))) == "s");
    StepCertificate cert = improvement_step(tree, phi, c);
    REQUIRE(cert.start == c);
    // Hand check: the displacement word is "s", the witness is "t", and
    // l(s . t) > l(s) forces the two-step rule with target t.s.t.
    REQUIRE(cert.rule == "advance-by-two");
    REQUIRE(tree.system().format(cert.after) == "t s t");
    REQUIRE(cert.after.length() > cert.before.length());
    REQUIRE(tree.distance(cert.moved, phi.map(cert.moved)) == cert.after.length());
    // The moved chamber shares the deeper endpoint of the starting edge.
    REQUIRE(tree.key_of(cert.moved).substr(0, 2) == "s0");
  }
  SECTION("fixed chambers are rejected") {
    REQUIRE_THROWS_AS(improvement_step(tree, phi, tree.chamber("t0")),
                      PreconditionError);
    REQUIRE_THROWS_AS(displacement_trace(tree, phi, tree.chamber("base"), 3),
                      PreconditionError);
  }
  SECTION("traces grow strictly from several starts") {
    for (const std::string& key : {"s0", "s1", "s00", "s010", "s111"}) {
      auto trace = displacement_trace(tree, phi, tree.chamber(key), 20);
      REQUIRE(trace.size() == 20);
      std::size_t prev = trace.front().before.length();
      for (const StepCertificate& cert : trace) {
        REQUIRE(cert.before.length() == prev);
        REQUIRE(cert.after.length() > cert.before.length());
        prev = cert.after.length();
      }
      REQUIRE(trace.back().after.length() >= 20);
    }
  }
}

TEST_CASE("improvement step on spherical buildings stops at the top",
          "[displacement]") {
  MgonBuilding b = MgonBuilding::from_geometry(fano_plane());
  BuildingAutomorphism shift = b.collineation("shift", fano_shift_maps());
  DisplacementReport table = disp_sup(b, shift);
  REQUIRE(table.max_displacement == 3);

  // From the extremal chamber no generator satisfies the hypotheses.
  REQUIRE_THROWS_AS(improvement_step(b, shift, table.argmax),
                    NoImprovingGenerator);

  // From a minimally displaced chamber the step still makes progress.
  for (ChamberId c = 0; c < b.num_chambers(); ++c)
    if (b.distance(c, shift.map(c)) == 2) {
      StepCertificate cert = improvement_step(b, shift, c);
      REQUIRE(cert.after.length() == 3);
      break;
    }
}

TEST_CASE("displacement tables", "[displacement]") {
  MgonBuilding b = MgonBuilding::from_geometry(fano_plane());
  BuildingAutomorphism shift = b.collineation("shift", fano_shift_maps());
  DisplacementReport rep = disp_sup(b, shift);
  REQUIRE(rep.exhaustive);
  REQUIRE(rep.diameter == 3);
  REQUIRE(rep.attains_diameter);
  std::size_t total = 0;
  for (std::size_t c : rep.histogram) total += c;
  REQUIRE(total == b.num_chambers());
  REQUIRE(rep.histogram[0] == 0);  // the shift fixes no flag

  SECTION("partial scans are marked as such") {
    DisplacementReport part = disp_over(b, shift, {0, 1, 2});
    REQUIRE(!part.exhaustive);
    REQUIRE(part.max_displacement <= rep.max_displacement);
  }
}

TEST_CASE("polygon displacement bounds", "[displacement]") {
  SECTION("odd gon, type-preserving: full displacement is forced") {
    MgonBuilding b = MgonBuilding::from_geometry(fano_plane());
    MgonBoundsReport rep = verify_mgon_bounds(b, b.collineation("shift", fano_shift_maps()));
    REQUIRE(rep.m == 3);
    REQUIRE(rep.type_preserving);
    REQUIRE(rep.guarantee_full);
    REQUIRE(rep.table.max_displacement == 3);
    REQUIRE(rep.ok());
  }
  SECTION("odd gon, type-reversing: only the m-1 bound applies") {
    MgonBuilding b = MgonBuilding::from_geometry(fano_plane());
    auto found = find_duality(b.geometry());
    REQUIRE(found.has_value());
    MgonBoundsReport rep =
        verify_mgon_bounds(b, b.duality("dual", found->first, found->second));
    REQUIRE(!rep.guarantee_full);
    REQUIRE(rep.table.max_displacement >= 2);
    REQUIRE(rep.ok());
  }
  SECTION("even gon, type-reversing: full displacement is forced") {
    QuadrangleF2 q = symplectic_quadrangle_f2();
    MgonBuilding b = MgonBuilding::from_geometry(q.geom);
    auto found = find_duality(q.geom);
    REQUIRE(found.has_value());
    MgonBoundsReport rep =
        verify_mgon_bounds(b, b.duality("dual", found->first, found->second));
    REQUIRE(rep.m == 4);
    REQUIRE(rep.guarantee_full);
    REQUIRE(rep.table.max_displacement == 4);
    REQUIRE(rep.ok());
  }
  SECTION("even gon, type-preserving elation: displacement exactly m-1") {
    QuadrangleF2 q = symplectic_quadrangle_f2();
    MgonBuilding b = MgonBuilding::from_geometry(q.geom);
    MgonBoundsReport rep = verify_mgon_bounds(
        b, b.collineation("elation", central_elation_maps(q, 0b0001)));
    REQUIRE(rep.type_preserving);
    REQUIRE(!rep.guarantee_full);
    REQUIRE(rep.table.max_displacement == 3);
    REQUIRE(rep.ok());
  }
}

TEST_CASE("fixed balls around an elation center", "[displacement]") {
  QuadrangleF2 q = symplectic_quadrangle_f2();
  MgonBuilding b = MgonBuilding::from_geometry(q.geom);
  f2::Vec center = 0b0001;
  PointLineMaps maps = central_elation_maps(q, center);
  GeomVertex center_vertex{false, q.point_index.at(center)};

  FixedBallReport rep = verify_fixed_ball(b, "elation", maps, center_vertex);
  REQUIRE(rep.radius == 2);
  REQUIRE(rep.ball_size == 10);  // point, 3 lines, 6 collinear points
  REQUIRE(rep.ball_fixed);
  REQUIRE(rep.other_type_max_move == 2);
  REQUIRE(rep.other_type_bound_ok);
  REQUIRE(rep.table.max_displacement == 3);
  REQUIRE(rep.displacement_is_m_minus_1);
  REQUIRE(rep.ok());

  SECTION("odd gons are rejected") {
    MgonBuilding fano = MgonBuilding::from_geometry(fano_plane());
    REQUIRE_THROWS_AS(
        verify_fixed_ball(fano, "shift", fano_shift_maps(), GeomVertex{false, 0}),
        PreconditionError);
  }
  SECTION("a map moving the ball is refused, naming a vertex") {
    PointLineMaps wrong = central_elation_maps(q, 0b0010);
    REQUIRE_THROWS_WITH(
        verify_fixed_ball(b, "other-elation", wrong, center_vertex),
        Catch::Matchers::ContainsSubstring("moves") &&
            Catch::Matchers::ContainsSubstring("ball"));
  }
  SECTION("the identity passes vacuously with displacement zero") {
    PointLineMaps id;
    for (std::size_t i = 0; i < q.geom.num_points(); ++i) id.point_map.push_back(i);
    for (std::size_t i = 0; i < q.geom.num_lines(); ++i) id.line_map.push_back(i);
    FixedBallReport r = verify_fixed_ball(b, "identity", id, center_vertex);
    REQUIRE(r.map_is_identity);
    REQUIRE(r.table.max_displacement == 0);
    REQUIRE(!r.displacement_is_m_minus_1);
    REQUIRE(r.ok());
  }
}

TEST_CASE("the symplectic polarity never sends a flag to an opposite one",
          "[displacement]") {
  SymplecticFlagBuilding b = SymplecticFlagBuilding::build(2);
  PolarityReport rep = verify_polarity(b);
  REQUIRE(rep.chambers == 315);
  REQUIRE(rep.non_opposite_by_weyl == 315);
  REQUIRE(rep.non_opposite_by_subspaces == 315);
  REQUIRE(rep.isotropic_lines == 315);
  REQUIRE(rep.criteria_agree_on_all_pairs);
  REQUIRE(!rep.table.attains_diameter);  // diameter 6 is never reached
  REQUIRE(rep.table.max_displacement == 4);
  // 45 = (self-perpendicular planes) x (lines inside each); the rest sit at
  // even Weyl distance 2 or 4 from their image.
  REQUIRE(rep.table.histogram ==
          std::vector<std::size_t>{45, 0, 90, 0, 180});
  REQUIRE(rep.ok());
}

TEST_CASE("translations of the thin line have bounded displacement",
          "[displacement]") {
  ThinTranslationReport rep = verify_thin_translation(10);
  REQUIRE(rep.chambers_checked == 21);
  REQUIRE(rep.all_displacements_two);
  REQUIRE(rep.step_raises_thickness_error);
  REQUIRE(rep.ok());
}
