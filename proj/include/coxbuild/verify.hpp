#pragma once

// The acceptance suite: nine self-contained checks, each returning a
// pass/fail verdict with the counted evidence. Parameters (length bounds,
// tolerances, seeds, expected counts) are fixed here on purpose; the CLI
// and the acceptance binary run these exact checks and nothing looser.

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxbuild/cone.hpp"
#include "coxbuild/displacement.hpp"
#include "coxbuild/oracles.hpp"
#include "coxbuild/tree_building.hpp"
#include "coxbuild/witness.hpp"

namespace coxbuild {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counted evidence, or the first failure
  double seconds = 0.0;
};

namespace detail {

inline CriterionResult timed_criterion(std::string name,
                                       const std::function<std::string()>& body) {
  CriterionResult r;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
    r.pass = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Throwing check helper: failed expectations become the criterion's detail.
inline void expect(bool cond, const std::string& msg) {
  if (!cond) throw SoundnessError(msg);
}

inline CoxeterSystem two_dinf_system() {
  auto inf = MOrder::inf();
  auto one = MOrder::finite(1);
  auto two = MOrder::finite(2);
  return CoxeterSystem(CoxeterMatrix({"s", "t", "u", "v"}, {{one, inf, two, two},
                                                            {inf, one, two, two},
                                                            {two, two, one, inf},
                                                            {two, two, inf, one}}));
}

}  // namespace detail

// 1. The word engine against independent group models: enumeration by
// products to length 10 must produce exactly the full finite groups, with
// engine lengths equal to Cayley-graph distances.
inline CriterionResult criterion_oracle_equivalence() {
  return detail::timed_criterion("oracle-equivalence", [] {
    struct Case {
      CoxeterSystem sys;
      oracle::Group model;
      std::size_t size;
    };
    const std::vector<Case> cases = {
        {make_type_a(2), oracle::symmetric_group_adjacent(3), 6},
        {make_dihedral(MOrder::finite(4)), oracle::square_symmetries(), 8},
        {make_type_a(3), oracle::symmetric_group_adjacent(4), 24},
    };
    for (const Case& c : cases) {
      std::vector<Element> ball = c.sys.ball(10);
      auto dist = oracle::cayley_ball(c.model, 10);
      detail::expect(ball.size() == c.size,
                     "engine enumerated " + std::to_string(ball.size()) +
                         " elements, expected " + std::to_string(c.size));
      detail::expect(dist.size() == c.size,
                     "model enumerated " + std::to_string(dist.size()) +
                         " elements, expected " + std::to_string(c.size));
      std::set<std::vector<long long>> images;
      for (const Element& e : ball) {
        auto img = oracle::eval_word(c.model, e.word);
        images.insert(img);
        auto it = dist.find(img);
        detail::expect(it != dist.end(), "engine element missing from the model");
        detail::expect(it->second == e.length(),
                       "length " + std::to_string(e.length()) +
                           " disagrees with graph distance " +
                           std::to_string(it->second) + " at " + c.sys.format(e));
      }
      detail::expect(images.size() == c.size, "engine-to-model map not injective");
    }
    return "6, 8, 24 elements enumerated; lengths match graph distances";
  });
}

// 2. Witness completeness at small scale: a verified witness for every
// nonidentity element of length <= 8 in the three reference systems.
inline CriterionResult criterion_witness_completeness() {
  return detail::timed_criterion("witness-completeness", [] {
    std::size_t found = 0;
    for (const CoxeterSystem& sys :
         {make_dihedral(MOrder::inf()), make_affine_a2(), detail::two_dinf_system()}) {
      for (const Element& w : sys.ball(8)) {
        if (w.is_identity()) continue;
        WitnessResult r = find_witness(sys, w);  // throws on failure
        detail::expect(witness_conditions_hold(sys, r.generator, w),
                       "witness re-verification failed at " + sys.format(w));
        ++found;
      }
    }
    return std::to_string(found) + " elements, witness found and verified for each";
  });
}

// 3. Word-exact wall predicates against the numerical chart at tolerance
// 1e-9, every (w, s) with l(w) <= 8.
inline CriterionResult criterion_wall_predicates() {
  return detail::timed_criterion("wall-predicates", [] {
    constexpr double tol = 1e-9;
    std::size_t pairs = 0;
    for (const CoxeterSystem& sys :
         {make_dihedral(MOrder::inf()), make_type_a(2), make_affine_a2()}) {
      ConeChart chart(sys);
      for (const Element& w : sys.ball(8))
        for (std::size_t s = 0; s < sys.rank(); ++s) {
          ++pairs;
          detail::expect(
              side_of_wall(sys, w, s) == side_of_wall_numeric(chart, w, s, tol),
              "side-of-wall disagreement at (" + sys.format(w) + ", " +
                  sys.matrix().label(s) + ")");
          detail::expect(
              is_wall_of_chamber(sys, s, w) ==
                  is_wall_of_chamber_numeric(chart, s, w, tol),
              "wall-of-chamber disagreement at (" + sys.format(w) + ", " +
                  sys.matrix().label(s) + ")");
        }
    }
    return std::to_string(pairs) + " (w, s) pairs, zero disagreements";
  });
}

// 4. Antipode probe: no sampled cell point of the enumerated region has its
// negative inside the region for the two infinite systems; the finite
// negative control must produce violations.
inline CriterionResult criterion_antipode_probes() {
  return detail::timed_criterion("antipode-probes", [] {
    std::ostringstream out;
    for (const CoxeterSystem& sys : {make_dihedral(MOrder::inf()), make_affine_a2()}) {
      AntipodeProbeReport rep = antipode_probe(sys, 10, 10, 0);
      detail::expect(rep.clean(), "negative of a sampled point landed in a chamber (" +
                                      std::to_string(rep.violations.size()) +
                                      " violations)");
      out << rep.samples << " samples clean; ";
    }
    AntipodeProbeReport finite = antipode_probe(make_type_a(2), 3, 10, 0);
    detail::expect(!finite.clean(), "finite negative control produced no violation");
    out << "finite control: " << finite.violations.size() << "/" << finite.samples
        << " violations";
    return out.str();
  });
}

// 5. Twenty strictly increasing improvement steps on the 3-regular tree
// from five distinct moved chambers.
inline CriterionResult criterion_tree_trace() {
  return detail::timed_criterion("tree-trace", [] {
    TreeBuilding tree(2);
    BuildingAutomorphism phi = tree.subtree_swap("s", 0, 1);
    const std::vector<std::string> starts = {"s0", "s1", "s00", "s010", "s111"};
    for (const std::string& key : starts) {
      auto trace = displacement_trace(tree, phi, tree.chamber(key), 20);
      detail::expect(trace.size() == 20, "trace from " + key + " is short");
      std::size_t prev = trace.front().before.length();
      for (const StepCertificate& cert : trace) {
        detail::expect(cert.before.length() == prev,
                       "trace from " + key + " broke the chamber chain");
        detail::expect(cert.after.length() > cert.before.length(),
                       "non-increasing step in the trace from " + key);
        prev = cert.after.length();
      }
    }
    return "5 starts, 20 strictly increasing steps each";
  });
}

// 6. Bounded displacement of the thin-complex translation, and the
// improvement step's refusal on thin panels.
inline CriterionResult criterion_thin_translation() {
  return detail::timed_criterion("thin-translation", [] {
    ThinTranslationReport rep = verify_thin_translation(10);
    detail::expect(rep.chambers_checked == 21,
                   "expected 21 chambers, saw " + std::to_string(rep.chambers_checked));
    detail::expect(rep.all_displacements_two, "a chamber moved other than 2 steps");
    detail::expect(rep.step_raises_thickness_error,
                   "the step did not refuse the thin panel");
    return "21 chambers all displaced exactly 2; step refused on thin panels";
  });
}

// 7. The polygon displacement numbers, exhaustively: plane shift 3 (= m,
// odd and type-preserving), quadrangle duality 4 (= m, even and
// type-reversing), central elation 3 (= m - 1).
inline CriterionResult criterion_polygon_displacement() {
  return detail::timed_criterion("polygon-displacement", [] {
    MgonBuilding plane = MgonBuilding::from_geometry(fano_plane());
    MgonBoundsReport shift =
        verify_mgon_bounds(plane, plane.collineation("shift", fano_shift_maps()));
    detail::expect(shift.table.exhaustive && plane.num_chambers() == 21,
                   "plane scan not exhaustive over 21 chambers");
    detail::expect(shift.guarantee_full && shift.ok() && shift.table.max_displacement == 3,
                   "plane shift displacement is not 3");

    QuadrangleF2 q = symplectic_quadrangle_f2();
    MgonBuilding quad = MgonBuilding::from_geometry(q.geom);
    auto dual_maps = find_duality(q.geom);
    detail::expect(dual_maps.has_value(), "no duality found for the quadrangle");
    MgonBoundsReport dual = verify_mgon_bounds(
        quad, quad.duality("dual", dual_maps->first, dual_maps->second));
    detail::expect(dual.table.exhaustive && quad.num_chambers() == 45,
                   "quadrangle scan not exhaustive over 45 chambers");
    detail::expect(dual.guarantee_full && dual.ok() && dual.table.max_displacement == 4,
                   "quadrangle duality displacement is not 4");

    MgonBoundsReport elation = verify_mgon_bounds(
        quad, quad.collineation("elation", central_elation_maps(q, 0b0001)));
    detail::expect(elation.ok() && elation.table.max_displacement == 3,
                   "central elation displacement is not 3");

    FixedBallReport ball = verify_fixed_ball(quad, "elation",
                                             central_elation_maps(q, 0b0001),
                                             GeomVertex{false, q.point_index.at(0b0001)});
    detail::expect(ball.ok(), "fixed-ball certificate failed");
    detail::expect(ball.other_type_max_move <= 2, "a line moved more than 2");
    return "shift 3/21 chambers, duality 4/45, elation 3 with ball of " +
           std::to_string(ball.ball_size) + " fixed";
  });
}

// 8. The symplectic polarity on all 315 chambers: non-opposite by both the
// Weyl-distance and the subspace criterion, and the criteria agree on every
// chamber pair.
inline CriterionResult criterion_polarity() {
  return detail::timed_criterion("polarity-non-opposition", [] {
    SymplecticFlagBuilding b = SymplecticFlagBuilding::build(2);
    PolarityReport rep = verify_polarity(b);
    detail::expect(rep.chambers == 315, "expected 315 chambers");
    detail::expect(rep.non_opposite_by_weyl == 315, "a chamber is Weyl-opposite its image");
    detail::expect(rep.non_opposite_by_subspaces == 315,
                   "a chamber is subspace-opposite its image");
    detail::expect(rep.isotropic_lines == 315, "a line is not inside its own perp");
    detail::expect(rep.criteria_agree_on_all_pairs,
                   "the two opposition criteria disagree on some pair");
    return "315/315 non-opposite by both criteria; criteria agree on all 99225 "
           "pairs; max displacement " +
           std::to_string(rep.table.max_displacement);
  });
}

// 9. The building axioms hold on all three finite models and fail on the
// corrupted control.
inline CriterionResult criterion_validators() {
  return detail::timed_criterion("building-validators", [] {
    auto first = [](const ValidationReport& r) {
      return r.violations.empty() ? std::string("ok") : r.violations.front();
    };
    ValidationReport plane = validate_building(MgonBuilding::from_geometry(fano_plane()));
    detail::expect(plane.ok(), "plane validator: " + first(plane));

    QuadrangleF2 q = symplectic_quadrangle_f2();
    ValidationReport quad = validate_building(MgonBuilding::from_geometry(q.geom));
    detail::expect(quad.ok(), "quadrangle validator: " + first(quad));

    ValidationReport flags = validate_building(SymplecticFlagBuilding::build(2));
    detail::expect(flags.ok(), "flag-building validator: " + first(flags));

    IncidenceGeometry g = fano_plane();
    std::erase(g.flags, std::make_pair(std::size_t{0}, std::size_t{0}));
    ValidationReport broken =
        validate_building(MgonBuilding::from_geometry_unchecked(g, 3));
    detail::expect(!broken.ok(), "corrupted control produced no violation");

    std::size_t checks = plane.checks + quad.checks + flags.checks;
    return std::to_string(checks) + " checks clean on 3 buildings; corrupted control: " +
           std::to_string(broken.violations.size()) + " violations";
  });
}

inline std::vector<CriterionResult> run_acceptance() {
  return {
      criterion_oracle_equivalence(),  criterion_witness_completeness(),
      criterion_wall_predicates(),     criterion_antipode_probes(),
      criterion_tree_trace(),          criterion_thin_translation(),
      criterion_polygon_displacement(), criterion_polarity(),
      criterion_validators(),
  };
}

}  // namespace coxbuild
