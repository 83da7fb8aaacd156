#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "coxbuild/cone.hpp"
#include "coxbuild/witness.hpp"

using namespace coxbuild;

namespace {

CoxeterSystem dinf() { return make_dihedral(MOrder::inf()); }

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

bool approx(double a, double b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("generator matrices are form-preserving involutions", "[cone]") {
  std::mt19937 rng(3);
  for (const CoxeterSystem& sys :
       {dinf(), make_dihedral(MOrder::finite(3)), make_affine_a2(), make_type_a(3)}) {
    ConeChart chart(sys);
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      const detail::Mat& m = chart.generator_matrix(s);
      detail::Mat sq = m * m;
      for (std::size_t i = 0; i < chart.dim(); ++i)
        for (std::size_t j = 0; j < chart.dim(); ++j)
          REQUIRE(approx(sq.at(i, j), i == j ? 1.0 : 0.0));
      for (int trial = 0; trial < 5; ++trial) {
        auto u = random_vec(rng, chart.dim());
        auto v = random_vec(rng, chart.dim());
        REQUIRE(approx(chart.form(m.apply(u), m.apply(v)), chart.form(u, v)));
      }
    }
    // Whole-word matrices preserve the form as well.
    for (const Element& w : sys.ball(4)) {
      detail::Mat m = chart.matrix_of(w);
      auto u = random_vec(rng, chart.dim());
      auto v = random_vec(rng, chart.dim());
      REQUIRE(approx(chart.form(m.apply(u), m.apply(v)), chart.form(u, v)));
    }
  }
}

TEST_CASE("bilinear form and reflections on pinned examples", "[cone]") {
  SECTION("infinite dihedral") {
    ConeChart chart(dinf());
    REQUIRE(approx(chart.bilinear(0, 0), 1.0));
    REQUIRE(approx(chart.bilinear(0, 1), -1.0));
    // s(e_t) = e_t + 2 e_s: column t of the s-matrix.
    const detail::Mat& ms = chart.generator_matrix(0);
    REQUIRE(approx(ms.at(0, 1), 2.0));
    REQUIRE(approx(ms.at(1, 1), 1.0));
    REQUIRE(approx(ms.at(0, 0), -1.0));
    REQUIRE(approx(ms.at(1, 0), 0.0));
    // Chamber point of s: pairings (-1, 3) against (e_s, e_t).
    CoxeterSystem sys = dinf();
    auto p = chart.chamber_point(sys.generator(0));
    REQUIRE(approx(p[0], -1.0));
    REQUIRE(approx(p[1], 3.0));
  }
  SECTION("A2") {
    ConeChart chart(make_dihedral(MOrder::finite(3)));
    REQUIRE(approx(chart.bilinear(0, 1), -0.5));
    REQUIRE(approx(chart.bilinear(1, 0), -0.5));
  }
}

TEST_CASE("chamber points are distinct per chamber", "[cone]") {
  for (const CoxeterSystem& sys : {dinf(), make_affine_a2(), make_type_a(3)}) {
    ConeChart chart(sys);
    std::vector<std::vector<double>> pts;
    for (const Element& w : sys.ball(6)) pts.push_back(chart.chamber_point(w));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        double dist = 0.0;
        for (std::size_t k = 0; k < pts[i].size(); ++k)
          dist = std::max(dist, std::abs(pts[i][k] - pts[j][k]));
        REQUIRE(dist > 1e-6);
      }
  }
}

TEST_CASE("word and chart wall-side predicates agree", "[cone]") {
  for (const CoxeterSystem& sys :
       {dinf(), make_dihedral(MOrder::finite(3)), make_affine_a2()}) {
    ConeChart chart(sys);
    for (const Element& w : sys.ball(8))
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        INFO("w = " << sys.format(w) << ", s = " << sys.matrix().label(s));
        REQUIRE(side_of_wall(sys, w, s) == side_of_wall_numeric(chart, w, s));
      }
  }
}

TEST_CASE("word and chart bounding-wall predicates agree", "[cone]") {
  CoxeterMatrix a1a1({"s", "t"}, {{MOrder::finite(1), MOrder::finite(2)},
                                  {MOrder::finite(2), MOrder::finite(1)}});
  for (const CoxeterSystem& sys : {dinf(), make_dihedral(MOrder::finite(3)),
                                   make_affine_a2(), CoxeterSystem(a1a1)}) {
    ConeChart chart(sys);
    for (const Element& w : sys.ball(8))
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        INFO("w = " << sys.format(w) << ", s = " << sys.matrix().label(s));
        REQUIRE(is_wall_of_chamber(sys, s, w) ==
                is_wall_of_chamber_numeric(chart, s, w));
      }
  }
}

TEST_CASE("geometric witness matches the word-level conditions", "[cone]") {
  for (const CoxeterSystem& sys : {dinf(), make_affine_a2()}) {
    for (const Element& w : sys.ball(5)) {
      if (w.is_identity()) continue;
      std::size_t s = geometric_witness(sys, w);
      REQUIRE(witness_conditions_hold(sys, s, w));
    }
  }
  REQUIRE_THROWS_AS(geometric_witness(dinf(), Element{}), PreconditionError);
  REQUIRE_THROWS_AS(
      geometric_witness(make_type_a(2), make_type_a(2).element("s1")),
      PreconditionError);
}

TEST_CASE("cell enumeration counts, dedup, and wall data", "[cone]") {
  SECTION("infinite dihedral, radius 2") {
    CoxeterSystem sys = dinf();
    ConeChart chart(sys);
    auto cells = enumerate_cells(sys, chart, 2);
    // 5 chambers, 3 vertices per side, 1 origin.
    REQUIRE(cells.size() == 12);
    std::set<Face> seen;
    for (const CellRecord& c : cells) REQUIRE(seen.insert(c.face).second);
  }
  SECTION("A2, whole group") {
    CoxeterSystem sys = make_dihedral(MOrder::finite(3));
    ConeChart chart(sys);
    auto cells = enumerate_cells(sys, chart, 3);
    // 6 chambers, 3 + 3 panels, 1 origin.
    REQUIRE(cells.size() == 13);
  }
  SECTION("support walls are reflections and vanish on the sample point") {
    CoxeterSystem sys = make_affine_a2();
    ConeChart chart(sys);
    for (const CellRecord& cell : enumerate_cells(sys, chart, 3)) {
      for (const Element& r : cell.support_walls) {
        REQUIRE(r.length() % 2 == 1);
        REQUIRE(sys.mul(r, r).is_identity());
      }
      // Pairings of the sample point against rep.e_s: 0 on J, 1 off J.
      detail::Mat m = chart.matrix_of(cell.face.rep);
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sys.rank(); ++i)
          acc += cell.sample_point[i] * m.at(i, s);
        bool in_j = std::binary_search(cell.face.J.begin(), cell.face.J.end(), s);
        REQUIRE(approx(acc, in_j ? 0.0 : 1.0));
      }
    }
  }
}

TEST_CASE("antipodal probe: clean on infinite systems, saturated on finite",
          "[cone]") {
  SECTION("infinite dihedral") {
    auto rep = antipode_probe(dinf(), 10, 10, 0);
    REQUIRE(rep.clean());
    REQUIRE(rep.cells_sampled > 0);
    REQUIRE(rep.samples == rep.cells_sampled * 10);
  }
  SECTION("affine A2") {
    auto rep = antipode_probe(make_affine_a2(), 6, 5, 0);
    REQUIRE(rep.clean());
    REQUIRE(rep.cells_sampled > 0);
  }
  SECTION("finite A2: every sampled antipode lands in a chamber") {
    auto rep = antipode_probe(make_dihedral(MOrder::finite(3)), 3, 10, 0);
    REQUIRE(rep.violations.size() == rep.samples);
    REQUIRE(!rep.violations.empty());
  }
}

TEST_CASE("cell CSV export", "[cone]") {
  std::ostringstream os;
  export_cells_csv(os, dinf(), 2);
  std::string out = os.str();
  std::size_t lines = std::count(out.begin(), out.end(), '\n');
  REQUIRE(lines == 13);  // header + 12 cells
  REQUIRE(out.rfind("cell_id,rep,J,x_s,x_t,side_s,side_t", 0) == 0);
  // The identity chamber row has strictly positive coordinates.
  REQUIRE(out.find(",1,1,+,+") != std::string::npos);
}
