#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "coxbuild/displacement.hpp"
#include "coxbuild/flag_building.hpp"
#include "coxbuild/mgon_building.hpp"
#include "coxbuild/thin_building.hpp"
#include "coxbuild/tree_building.hpp"

using namespace coxbuild;

namespace {
std::string first_violation(const ValidationReport& rep) {
  return rep.violations.empty() ? std::string("no violations") : rep.violations.front();
}
}  // namespace

TEST_CASE("thin chamber systems mirror the group", "[buildings]") {
  ThinBuilding thin(make_dihedral(MOrder::inf()));
  const CoxeterSystem& sys = thin.system();
  REQUIRE(thin.family() == "thin");
  REQUIRE(!thin.finite());

  ChamberId c0 = thin.chamber(Element{});
  REQUIRE(c0 == 0);
  REQUIRE(thin.chamber_label(c0) == "1");

  SECTION("panels have exactly two chambers") {
    for (const Element& w : sys.ball(4)) {
      ChamberId c = thin.chamber(w);
      for (std::size_t s = 0; s < 2; ++s) {
        auto p = thin.panel(c, s);
        REQUIRE(p.size() == 2);
        REQUIRE(std::set<ChamberId>(p.begin(), p.end()).count(c) == 1);
        REQUIRE(p[0] < p[1]);
      }
    }
  }
  SECTION("Weyl distance is the quotient") {
    for (const Element& a : sys.ball(3))
      for (const Element& b : sys.ball(3))
        REQUIRE(thin.delta(thin.chamber(a), thin.chamber(b)) ==
                sys.mul(sys.inverse(a), b));
  }
  SECTION("left translations are Weyl-equivariant") {
    BuildingAutomorphism phi = left_translation(thin, sys.element("t s"));
    REQUIRE(phi.type_preserving());
    std::vector<std::pair<ChamberId, ChamberId>> pairs;
    for (const Element& a : sys.ball(3))
      for (const Element& b : sys.ball(3))
        pairs.emplace_back(thin.chamber(a), thin.chamber(b));
    ValidationReport rep;
    check_equivariance_on(thin, phi, pairs, rep);
    REQUIRE(rep.ok());
    REQUIRE(rep.checks == pairs.size());
  }
  SECTION("opposition needs a spherical system") {
    REQUIRE_THROWS_AS(thin.opposite(0, 0), PreconditionError);
    ThinBuilding small(make_type_a(2));
    ChamberId e = small.chamber(Element{});
    ChamberId w0 = small.chamber(small.system().longest_element());
    REQUIRE(small.opposite(e, w0));
    REQUIRE(!small.opposite(e, e));
  }
}

TEST_CASE("the three-regular tree over the infinite dihedral group", "[buildings]") {
  TreeBuilding tree(2);
  REQUIRE(tree.branching() == 2);
  REQUIRE(tree.family() == "tree");
  REQUIRE_THROWS_AS(TreeBuilding(1), PreconditionError);
  REQUIRE_THROWS_AS(TreeBuilding(10), PreconditionError);

  ChamberId base = tree.chamber("base");
  REQUIRE(base == 0);

  SECTION("addresses") {
    REQUIRE(tree.vertex_side("s") == 0);
    REQUIRE(tree.vertex_side("t") == 1);
    REQUIRE(tree.vertex_side("s0") == 1);
    REQUIRE(tree.vertex_side("t1") == 0);
    REQUIRE(tree.vertex_side("s01") == 0);
    REQUIRE_THROWS_AS(tree.chamber("s"), PreconditionError);   // vertex, not edge
    REQUIRE_THROWS_AS(tree.chamber("x0"), PreconditionError);
    REQUIRE_THROWS_AS(tree.chamber("s2"), PreconditionError);  // digit out of range
  }
  SECTION("panels are the q+1 edges through a vertex") {
    auto p0 = tree.panel(base, 0);  // edges through the s-root
    REQUIRE(p0.size() == 3);
    std::set<std::string> keys;
    for (ChamberId c : p0) keys.insert(tree.key_of(c));
    REQUIRE(keys == std::set<std::string>{"base", "s0", "s1"});

    auto p1 = tree.panel(tree.chamber("s0"), 1);  // through the vertex s0
    keys.clear();
    for (ChamberId c : p1) keys.insert(tree.key_of(c));
    REQUIRE(keys == std::set<std::string>{"s0", "s00", "s01"});
  }
  SECTION("Weyl distances along arcs") {
    const CoxeterSystem& sys = tree.system();
    auto d = [&](const std::string& a, const std::string& b) {
      return sys.format(tree.delta(tree.chamber(a), tree.chamber(b)));
    };
    REQUIRE(tree.delta(base, base).is_identity());
    REQUIRE(d("base", "s0") == "s");
    REQUIRE(d("base", "t0") == "t");
    REQUIRE(d("s0", "s1") == "s");
    REQUIRE(d("base", "s00") == "s t");
    REQUIRE(d("s00", "base") == "t s");
    REQUIRE(d("s0", "t0") == "s t");
    REQUIRE(d("s00", "t00") == "t s t s");
    REQUIRE(d("s00", "s01") == "t");
    REQUIRE(d("s000", "s010") == "s t s");
  }
  SECTION("subtree swaps are Weyl-equivariant automorphisms") {
    BuildingAutomorphism phi = tree.subtree_swap("s", 0, 1);
    REQUIRE(phi.type_preserving());
    REQUIRE(phi.map(base) == base);
    REQUIRE(tree.key_of(phi.map(tree.chamber("s0"))) == "s1");
    REQUIRE(tree.key_of(phi.map(tree.chamber("s010"))) == "s110");
    REQUIRE(tree.key_of(phi.map(tree.chamber("t0"))) == "t0");

    std::vector<std::string> keys{"base", "s0",  "s1",  "s00", "s01", "s10",
                                  "t0",   "t1",  "t00", "s000", "s111"};
    std::vector<std::pair<ChamberId, ChamberId>> pairs;
    for (const auto& a : keys)
      for (const auto& b : keys)
        pairs.emplace_back(tree.chamber(a), tree.chamber(b));
    ValidationReport rep;
    check_equivariance_on(tree, phi, pairs, rep);
    REQUIRE(rep.ok());
  }
}

TEST_CASE("flag buildings of the seven-point plane", "[buildings]") {
  MgonBuilding b = MgonBuilding::from_geometry(fano_plane());
  REQUIRE(b.gon() == 3);
  REQUIRE(b.num_chambers() == 21);
  REQUIRE(b.spherical());

  SECTION("panels and labels") {
    ChamberId c = b.chamber_of_flag(0, 0);
    REQUIRE(b.chamber_label(c) == "(p0, l0)");
    auto same_line = b.panel(c, 0);
    REQUIRE(same_line.size() == 3);
    for (ChamberId d : same_line) REQUIRE(b.flag_of(d).second == 0);
    auto same_point = b.panel(c, 1);
    REQUIRE(same_point.size() == 3);
    for (ChamberId d : same_point) REQUIRE(b.flag_of(d).first == 0);
    REQUIRE_THROWS_AS(b.chamber_of_flag(2, 0), PreconditionError);  // p2 not on l0
  }
  SECTION("axioms hold") {
    ValidationReport rep = validate_building(b);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
    REQUIRE(rep.checks > 0);
  }
  SECTION("Weyl distances between named flags") {
    auto dd = [&](ChamberId x, ChamberId y) { return b.system().format(b.delta(x, y)); };
    ChamberId c = b.chamber_of_flag(0, 0);
    REQUIRE(dd(c, b.chamber_of_flag(1, 0)) == "s");
    REQUIRE(dd(c, b.chamber_of_flag(0, 4)) == "t");
    // Some chamber is opposite: the diameter is 3.
    std::size_t opposite = 0;
    for (ChamberId e = 0; e < b.num_chambers(); ++e)
      if (b.opposite(c, e)) ++opposite;
    REQUIRE(opposite > 0);
  }
  SECTION("the cyclic shift is an automorphism") {
    BuildingAutomorphism shift = b.collineation("shift", fano_shift_maps());
    REQUIRE(shift.type_preserving());
    ValidationReport rep = validate_automorphism(b, shift);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
  SECTION("a correlation exists and reverses types") {
    auto found = find_duality(b.geometry());
    REQUIRE(found.has_value());
    BuildingAutomorphism dual = b.duality("dual", found->first, found->second);
    REQUIRE(!dual.type_preserving());
    ValidationReport rep = validate_automorphism(b, dual);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
  SECTION("bad maps are rejected with a witness") {
    PointLineMaps bad = fano_shift_maps();
    std::swap(bad.point_map[0], bad.point_map[1]);  // breaks incidence
    CHECK_THROWS_WITH(b.collineation("bad", bad),
                      Catch::Matchers::ContainsSubstring("non-flag"));
  }
}

TEST_CASE("a corrupted plane fails the axioms", "[buildings]") {
  IncidenceGeometry g = fano_plane();
  auto removed = std::make_pair(std::size_t{0}, std::size_t{0});
  std::erase(g.flags, removed);
  REQUIRE(g.flags.size() == 20);

  REQUIRE_THROWS_AS(MgonBuilding::from_geometry(g), PreconditionError);

  MgonBuilding broken = MgonBuilding::from_geometry_unchecked(g, 3);
  ValidationReport rep = validate_building(broken);
  REQUIRE(!rep.ok());
  REQUIRE(rep.violations.size() >= 1);
}

TEST_CASE("the symplectic quadrangle as a building", "[buildings]") {
  QuadrangleF2 q = symplectic_quadrangle_f2();
  MgonBuilding b = MgonBuilding::from_geometry(q.geom);
  REQUIRE(b.gon() == 4);
  REQUIRE(b.num_chambers() == 45);

  SECTION("axioms hold") {
    ValidationReport rep = validate_building(b);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
  SECTION("central elations are automorphisms") {
    BuildingAutomorphism phi =
        b.collineation("elation", central_elation_maps(q, 0b0001));
    ValidationReport rep = validate_automorphism(b, phi);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
  SECTION("the quadrangle is self-dual") {
    auto found = find_duality(q.geom);
    REQUIRE(found.has_value());
    BuildingAutomorphism dual = b.duality("dual", found->first, found->second);
    ValidationReport rep = validate_automorphism(b, dual);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
}

TEST_CASE("the building of complete symplectic flags", "[buildings]") {
  SymplecticFlagBuilding b = SymplecticFlagBuilding::build(2);
  REQUIRE(b.num_chambers() == 315);
  REQUIRE(b.system().rank() == 3);
  REQUIRE(b.system().matrix().label(0) == "s1");
  REQUIRE(b.spherical());
  REQUIRE(b.system().longest_element().length() == 6);
  REQUIRE_THROWS_AS(SymplecticFlagBuilding::build(3), LimitError);

  SECTION("panels have three chambers") {
    for (ChamberId c : {ChamberId{0}, ChamberId{100}, ChamberId{314}})
      for (std::size_t s = 0; s < 3; ++s) REQUIRE(b.panel(c, s).size() == 3);
  }
  SECTION("axioms hold") {
    ValidationReport rep = validate_building(b);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
  SECTION("the polarity is an involutive type-reversing automorphism") {
    BuildingAutomorphism phi = b.symplectic_polarity();
    REQUIRE(phi.sigma == std::vector<std::size_t>{2, 1, 0});
    for (ChamberId c = 0; c < b.num_chambers(); ++c)
      REQUIRE(phi.map(phi.map(c)) == c);
    ValidationReport rep = validate_automorphism(b, phi);
    INFO(first_violation(rep));
    REQUIRE(rep.ok());
  }
  SECTION("subspace opposition matches the Weyl criterion") {
    Element longest = b.system().longest_element();
    std::mt19937 rng(5);
    std::uniform_int_distribution<ChamberId> pick(0, 314);
    for (int i = 0; i < 200; ++i) {
      ChamberId x = pick(rng), y = pick(rng);
      REQUIRE(b.opposite_by_subspaces(x, y) == (b.delta(x, y) == longest));
    }
  }
  SECTION("labels name the chain") {
    std::string label = b.chamber_label(0);
    REQUIRE(label.find('<') != std::string::npos);
    REQUIRE(label.find('[') == 0);
  }
}
