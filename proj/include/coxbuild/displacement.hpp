#pragma once

// Displacement of building automorphisms: the panel-step that strictly
// increases the Weyl distance to the image, traces of repeated steps,
// exhaustive displacement tables for finite buildings, and the checkable
// reports behind the polygon, polarity, fixed-ball, and thin-translation
// claims.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coxbuild/building.hpp"
#include "coxbuild/flag_building.hpp"
#include "coxbuild/mgon_building.hpp"
#include "coxbuild/thin_building.hpp"
#include "coxbuild/witness.hpp"

namespace coxbuild {

// A panel that should offer an alternative mate has too few chambers; the
// step is impossible (and displacement can stay bounded, as it does for
// translations of thin complexes).
class ThicknessViolation : public Error {
 public:
  using Error::Error;
};

// No generator satisfies the step hypotheses at this chamber; in spherical
// buildings this happens once the displacement cannot grow further.
class NoImprovingGenerator : public Error {
 public:
  using Error::Error;
};

struct StepCertificate {
  ChamberId start = 0;   // C
  ChamberId moved = 0;   // D, s-adjacent to C
  std::size_t generator = 0;   // s
  std::size_t image_type = 0;  // sigma(s)
  Element before;              // delta(C, phi C)
  Element after;               // delta(D, phi D)
  std::string rule;            // "advance-by-one" | "advance-by-two"
};

// One strict improvement: returns a chamber D adjacent to C with
// d(D, phi D) > d(C, phi C). Requires delta(C, phi C) != 1. Generator
// choice: the witness machinery when the Weyl group is purely infinite,
// otherwise the first generator s with l(s w) > l(w) and w^{-1} s w
// distinct from sigma(s).
inline StepCertificate improvement_step(const Building& b,
                                        const BuildingAutomorphism& phi,
                                        ChamberId c) {
  const CoxeterSystem& sys = b.system();
  if (!is_diagram_automorphism(sys, phi.sigma))
    throw PreconditionError("sigma is not a diagram automorphism");
  ChamberId phi_c = phi.map(c);
  Element w = b.delta(c, phi_c);
  if (w.is_identity())
    throw PreconditionError("chamber is fixed; nothing to improve");

  std::optional<std::size_t> s;
  if (sys.is_purely_infinite()) {
    s = find_witness(sys, w).generator;
  } else {
    for (std::size_t cand = 0; cand < sys.rank(); ++cand) {
      if (sys.mul(cand, w).length() <= w.length()) continue;
      if (sys.conjugate_as_generator(cand, w) == phi.sigma[cand]) continue;
      s = cand;
      break;
    }
    if (!s)
      throw NoImprovingGenerator("no generator satisfies the step hypotheses at " +
                                 b.chamber_label(c));
  }
  const std::size_t t = phi.sigma[*s];

  StepCertificate cert;
  cert.start = c;
  cert.generator = *s;
  cert.image_type = t;
  cert.before = w;

  std::vector<ChamberId> panel_c = b.panel(c, *s);
  Element wt = sys.mul(w, t);
  Element target;
  if (wt.length() < w.length()) {
    cert.rule = "advance-by-one";
    target = sys.mul(*s, w);
    if (panel_c.size() < 3)
      throw ThicknessViolation("panel of " + b.chamber_label(c) + " for generator " +
                               sys.matrix().label(*s) +
                               " has no third chamber to dodge the gate");
    // The unique chamber of the image panel nearer to C; its preimage must
    // be avoided.
    std::vector<ChamberId> image_panel = b.panel(phi_c, t);
    std::optional<ChamberId> gate;
    for (ChamberId e : image_panel)
      if (b.delta(c, e) == wt) {
        if (gate) throw SoundnessError("image panel has two gates");
        gate = e;
      }
    if (!gate) throw SoundnessError("image panel has no gate");
    std::optional<ChamberId> dodger;
    for (ChamberId d : panel_c)
      if (d != c && phi.map(d) != *gate) {
        dodger = d;
        break;
      }
    if (!dodger) throw SoundnessError("no panel mate avoids the gate");
    cert.moved = *dodger;
  } else {
    cert.rule = "advance-by-two";
    target = sys.mul(*s, wt);
    std::optional<ChamberId> mate;
    for (ChamberId d : panel_c)
      if (d != c) {
        mate = d;
        break;
      }
    if (!mate) throw SoundnessError("panel has a single chamber");
    cert.moved = *mate;
  }

  cert.after = b.delta(cert.moved, phi.map(cert.moved));
  if (!(cert.after == target))
    throw SoundnessError("step certificate mismatch: expected " +
                         sys.format(target) + ", found " + sys.format(cert.after));
  if (cert.after.length() <= cert.before.length())
    throw SoundnessError("step failed to increase the displacement");
  return cert;
}

// Iterates the improvement step; the resulting Weyl distances strictly
// increase, which is the unbounded-displacement engine for thick buildings
// over purely infinite Weyl groups.
inline std::vector<StepCertificate> displacement_trace(const Building& b,
                                                       const BuildingAutomorphism& phi,
                                                       ChamberId start,
                                                       std::size_t steps) {
  if (!b.system().is_purely_infinite())
    throw PreconditionError(
        "unbounded-displacement traces need a purely infinite Weyl group");
  if (b.delta(start, phi.map(start)).is_identity())
    throw PreconditionError("start chamber is fixed by the map");
  std::vector<StepCertificate> trace;
  trace.reserve(steps);
  ChamberId c = start;
  for (std::size_t i = 0; i < steps; ++i) {
    trace.push_back(improvement_step(b, phi, c));
    c = trace.back().moved;
  }
  return trace;
}

// ----- displacement tables -----

struct DisplacementReport {
  std::size_t max_displacement = 0;
  ChamberId argmax = 0;
  std::string argmax_label;
  bool exhaustive = false;                 // every chamber was scanned
  std::optional<std::size_t> diameter;     // spherical buildings only
  bool attains_diameter = false;
  std::vector<std::size_t> histogram;      // index = displacement value
};

inline DisplacementReport disp_over(const Building& b, const BuildingAutomorphism& phi,
                                    const std::vector<ChamberId>& chambers) {
  if (chambers.empty()) throw PreconditionError("no chambers to scan");
  DisplacementReport rep;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    ChamberId c = chambers[i];
    std::size_t d = b.distance(c, phi.map(c));
    if (d >= rep.histogram.size()) rep.histogram.resize(d + 1, 0);
    ++rep.histogram[d];
    if (i == 0 || d > rep.max_displacement) {
      rep.max_displacement = d;
      rep.argmax = c;
      rep.argmax_label = b.chamber_label(c);
    }
  }
  if (b.spherical()) {
    rep.diameter = b.system().longest_element().length();
    rep.attains_diameter = rep.max_displacement == *rep.diameter;
  }
  return rep;
}

inline DisplacementReport disp_sup(const FiniteBuilding& b,
                                   const BuildingAutomorphism& phi) {
  std::vector<ChamberId> all(b.num_chambers());
  for (ChamberId c = 0; c < b.num_chambers(); ++c) all[c] = c;
  DisplacementReport rep = disp_over(b, phi, all);
  rep.exhaustive = true;
  return rep;
}

// ----- polygon displacement bounds -----

// In a thick generalized m-gon every automorphism displaces some chamber
// at least m-1 steps; when the parity of m matches the type behaviour
// (preserving and odd, or reversing and even) some chamber reaches the
// full diameter m.
struct MgonBoundsReport {
  std::size_t m = 0;
  bool type_preserving = false;
  bool guarantee_full = false;  // parity forces displacement m
  DisplacementReport table;
  bool lower_bound_ok = false;  // max >= m - 1
  bool full_bound_ok = false;   // max == m when guaranteed
  bool ok() const { return lower_bound_ok && full_bound_ok; }
};

inline MgonBoundsReport verify_mgon_bounds(const MgonBuilding& b,
                                           const BuildingAutomorphism& phi) {
  MgonBoundsReport rep;
  rep.m = b.gon();
  rep.type_preserving = phi.type_preserving();
  rep.guarantee_full = (rep.type_preserving && rep.m % 2 == 1) ||
                       (!rep.type_preserving && rep.m % 2 == 0);
  rep.table = disp_sup(b, phi);
  rep.lower_bound_ok = rep.table.max_displacement >= rep.m - 1;
  rep.full_bound_ok = !rep.guarantee_full || rep.table.max_displacement == rep.m;
  return rep;
}

// ----- fixed balls around a center of a collineation -----

// For a type-preserving map of an even gon built from point/line
// permutations: certifies that the ball of radius m/2 around the center is
// fixed vertexwise (a moved ball vertex is a contract violation and throws,
// naming the vertex), that vertices of the other type move at most m-2, and
// reports the chamber displacement table. The exact-value conclusion
// disp = m-1 applies only to nontrivial maps; the identity passes the ball
// check vacuously with displacement 0.
struct FixedBallReport {
  GeomVertex center;
  std::size_t radius = 0;
  std::size_t ball_size = 0;
  bool ball_fixed = false;
  bool map_is_identity = false;
  std::size_t other_type_max_move = 0;
  bool other_type_bound_ok = false;  // <= m - 2
  DisplacementReport table;
  bool displacement_is_m_minus_1 = false;
  bool ok() const {
    return ball_fixed && other_type_bound_ok &&
           (map_is_identity ? table.max_displacement == 0
                            : displacement_is_m_minus_1);
  }
};

inline FixedBallReport verify_fixed_ball(const MgonBuilding& b, const std::string& name,
                                         const PointLineMaps& maps, GeomVertex center) {
  if (b.gon() % 2 != 0)
    throw PreconditionError("fixed-ball certificates are for even gons");
  const IncidenceGeometry& g = b.geometry();
  FixedBallReport rep;
  rep.center = center;
  rep.radius = b.gon() / 2;

  auto image = [&](GeomVertex v) {
    return GeomVertex{v.is_line, v.is_line ? maps.line_map.at(v.index)
                                           : maps.point_map.at(v.index)};
  };
  auto label = [&](GeomVertex v) {
    return v.is_line ? "line " + g.line_labels[v.index]
                     : "point " + g.point_labels[v.index];
  };

  rep.ball_fixed = true;
  for (GeomVertex v : vertex_ball(g, center, rep.radius)) {
    ++rep.ball_size;
    if (!(image(v) == v))
      throw PreconditionError("map " + name + " moves " + label(v) +
                              " inside the radius-" + std::to_string(rep.radius) +
                              " ball around " + label(center));
  }

  rep.map_is_identity = true;
  for (std::size_t i = 0; i < maps.point_map.size() && rep.map_is_identity; ++i)
    if (maps.point_map[i] != i) rep.map_is_identity = false;
  for (std::size_t i = 0; i < maps.line_map.size() && rep.map_is_identity; ++i)
    if (maps.line_map[i] != i) rep.map_is_identity = false;

  for (std::size_t i = 0; i < (center.is_line ? g.num_points() : g.num_lines()); ++i) {
    GeomVertex v{!center.is_line, i};
    GeomVertex w = image(v);
    if (!(w == v))
      rep.other_type_max_move =
          std::max(rep.other_type_max_move, vertex_distance(g, v, w));
  }
  rep.other_type_bound_ok = rep.other_type_max_move <= b.gon() - 2;

  rep.table = disp_sup(b, b.collineation(name, maps));
  rep.displacement_is_m_minus_1 = rep.table.max_displacement == b.gon() - 1;
  return rep;
}

// ----- the symplectic polarity never reaches an opposite chamber -----

struct PolarityReport {
  std::size_t chambers = 0;
  std::size_t non_opposite_by_weyl = 0;       // delta(F, phi F) != longest
  std::size_t non_opposite_by_subspaces = 0;  // complementarity fails somewhere
  std::size_t isotropic_lines = 0;            // U_1 inside its own perp
  bool criteria_agree_on_all_pairs = false;
  DisplacementReport table;
  bool ok() const {
    return non_opposite_by_weyl == chambers &&
           non_opposite_by_subspaces == chambers && isotropic_lines == chambers &&
           criteria_agree_on_all_pairs;
  }
};

inline PolarityReport verify_polarity(const SymplecticFlagBuilding& b) {
  PolarityReport rep;
  rep.chambers = b.num_chambers();
  BuildingAutomorphism phi = b.symplectic_polarity();
  Element longest = b.system().longest_element();

  for (ChamberId c = 0; c < b.num_chambers(); ++c) {
    ChamberId ic = phi.map(c);
    if (!(b.delta(c, ic) == longest)) ++rep.non_opposite_by_weyl;
    if (!b.opposite_by_subspaces(c, ic)) ++rep.non_opposite_by_subspaces;
    const auto& line = b.flag_of(c).front();
    if (b.space().orthogonal(line).contains(line)) ++rep.isotropic_lines;
  }

  rep.criteria_agree_on_all_pairs = true;
  for (ChamberId a = 0; a < b.num_chambers(); ++a)
    for (ChamberId c = 0; c < b.num_chambers(); ++c)
      if ((b.delta(a, c) == longest) != b.opposite_by_subspaces(a, c)) {
        rep.criteria_agree_on_all_pairs = false;
        break;
      }

  rep.table = disp_sup(b, phi);
  return rep;
}

// ----- translations of thin complexes stay bounded -----

// Left translation by "s t" on the thin infinite-dihedral complex moves
// every chamber exactly two steps, and the improvement step must refuse:
// its panels never offer a third chamber.
struct ThinTranslationReport {
  std::size_t chambers_checked = 0;
  bool all_displacements_two = false;
  bool step_raises_thickness_error = false;
  bool ok() const { return all_displacements_two && step_raises_thickness_error; }
};

inline ThinTranslationReport verify_thin_translation(std::size_t max_len = 10) {
  ThinTranslationReport rep;
  ThinBuilding thin(make_dihedral(MOrder::inf()));
  const CoxeterSystem& sys = thin.system();
  BuildingAutomorphism phi = left_translation(thin, sys.element("s t"));

  rep.all_displacements_two = true;
  for (const Element& w : sys.ball(max_len)) {
    ChamberId c = thin.chamber(w);
    ++rep.chambers_checked;
    if (thin.distance(c, phi.map(c)) != 2) rep.all_displacements_two = false;
  }

  try {
    improvement_step(thin, phi, thin.chamber(Element{}));
  } catch (const ThicknessViolation&) {
    rep.step_raises_thickness_error = true;
  }
  return rep;
}

}  // namespace coxbuild
