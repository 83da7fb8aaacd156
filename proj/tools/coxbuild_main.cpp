// coxbuild: exact Coxeter words, cone charts, building simulators, and
// displacement reports from one binary.
//
// Subcommand groups:
//   coxeter info|reduce|equal|length|longest   word-engine queries
//   witness                                    verified witness generators
//   cone export|probe                          chart cells and antipode probe
//   disp table|trace                           displacement tables and traces
//   verify corollary3|example1|remark2|remark5|all   checked reports
//
// Exit status: 0 when every asserted check passes, 1 when a check fails,
// 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxbuild/cone.hpp"
#include "coxbuild/displacement.hpp"
#include "coxbuild/tree_building.hpp"
#include "coxbuild/verify.hpp"

using json = nlohmann::json;
using namespace coxbuild;

namespace {

// ----- shared report serialization -----

json table_json(const DisplacementReport& rep) {
  json j{{"max_displacement", rep.max_displacement},
         {"argmax", rep.argmax_label},
         {"exhaustive", rep.exhaustive},
         {"histogram", rep.histogram}};
  if (rep.diameter) {
    j["diameter"] = *rep.diameter;
    j["attains_diameter"] = rep.attains_diameter;
  }
  return j;
}

void table_text(std::ostream& os, const DisplacementReport& rep) {
  for (std::size_t d = 0; d < rep.histogram.size(); ++d)
    if (rep.histogram[d] != 0)
      os << "  displacement " << d << ": " << rep.histogram[d] << " chambers\n";
  os << "  max displacement " << (rep.exhaustive ? "" : ">= ") << rep.max_displacement
     << " at " << rep.argmax_label << "\n";
  if (rep.diameter)
    os << "  diameter " << *rep.diameter
       << (rep.attains_diameter ? " (attained: an opposite pair exists)"
                                : " (not attained: no chamber meets an opposite image)")
       << "\n";
  if (!rep.exhaustive)
    os << "  (lower bound within the scanned region, not a supremum)\n";
}

json bounds_json(const MgonBoundsReport& rep) {
  return {{"m", rep.m},
          {"type_preserving", rep.type_preserving},
          {"guarantee_full", rep.guarantee_full},
          {"lower_bound_ok", rep.lower_bound_ok},
          {"full_bound_ok", rep.full_bound_ok},
          {"ok", rep.ok()},
          {"table", table_json(rep.table)}};
}

json certificate_json(const CoxeterSystem& sys, const WitnessResult& r) {
  return {{"witness", sys.matrix().label(r.generator)},
          {"path", r.path},
          {"certificates",
           {{"len_w", r.certs.len_w},
            {"len_sw", r.certs.len_sw},
            {"conjugate_is_generator", r.certs.conjugate_is_generator},
            {"conjugate", sys.format(r.certs.conjugate)}}}};
}

json step_json(const Building& b, const StepCertificate& cert) {
  const CoxeterSystem& sys = b.system();
  return {{"start", b.chamber_label(cert.start)},
          {"moved", b.chamber_label(cert.moved)},
          {"generator", sys.matrix().label(cert.generator)},
          {"image_type", sys.matrix().label(cert.image_type)},
          {"rule", cert.rule},
          {"before", sys.format(cert.before)},
          {"after", sys.format(cert.after)},
          {"len_before", cert.before.length()},
          {"len_after", cert.after.length()}};
}

void emit(const std::string& format, const json& j,
          const std::function<void(std::ostream&)>& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    text(std::cout);
}

// ----- building + automorphism selection for disp -----

struct DispConfig {
  std::string building = "fano";
  std::string map;  // default depends on the building
  unsigned q = 2;
  unsigned radius = 4;
  std::size_t max_len = 8;
  std::string center_bits = "0001";
  std::string word = "s t";
  std::string addr = "s";
  unsigned child_a = 0;
  unsigned child_b = 1;
  std::string start = "s0";
  std::size_t steps = 20;
};

f2::Vec parse_center(const std::string& bits) {
  if (bits.empty() || bits.find_first_not_of("01") != std::string::npos)
    throw ParseError("center must be a nonempty binary string, got '" + bits + "'");
  unsigned long v = std::stoul(bits, nullptr, 2);
  if (v == 0) throw ParseError("center must be a nonzero vector");
  return static_cast<f2::Vec>(v);
}

int cmd_disp_table(const DispConfig& cfg, const std::string& format) {
  if (cfg.building == "tree") {
    TreeBuilding tree(cfg.q);
    BuildingAutomorphism phi = tree.subtree_swap(cfg.addr, cfg.child_a, cfg.child_b);
    // Edges keyed by their deeper endpoint: the base edge plus every
    // address of at most `radius` digits.
    std::vector<ChamberId> region{tree.chamber("base")};
    std::function<void(const std::string&, unsigned)> grow = [&](const std::string& a,
                                                                 unsigned depth) {
      region.push_back(tree.chamber(a));
      if (depth >= cfg.radius) return;
      for (unsigned d = 0; d < cfg.q; ++d)
        grow(a + static_cast<char>('0' + d), depth + 1);
    };
    for (const char* side : {"s", "t"})
      for (unsigned d = 0; d < cfg.q; ++d)
        grow(side + std::string(1, static_cast<char>('0' + d)), 1);
    DisplacementReport rep = disp_over(tree, phi, region);
    emit(format,
         json{{"building", "tree"},
              {"map", phi.name},
              {"radius", cfg.radius},
              {"chambers_scanned", region.size()},
              {"table", table_json(rep)}},
         [&](std::ostream& os) {
           os << "tree with branching " << cfg.q << ", map " << phi.name << ", "
              << region.size() << " chambers within radius " << cfg.radius << "\n";
           table_text(os, rep);
         });
    return 0;
  }

  if (cfg.building == "thin") {
    ThinBuilding thin(make_dihedral(MOrder::inf()));
    BuildingAutomorphism phi =
        left_translation(thin, thin.system().element(cfg.word));
    std::vector<ChamberId> region;
    for (const Element& w : thin.system().ball(cfg.max_len))
      region.push_back(thin.chamber(w));
    DisplacementReport rep = disp_over(thin, phi, region);
    emit(format,
         json{{"building", "thin"},
              {"map", phi.name},
              {"max_len", cfg.max_len},
              {"chambers_scanned", region.size()},
              {"table", table_json(rep)}},
         [&](std::ostream& os) {
           os << "thin infinite dihedral complex, translation by \"" << cfg.word
              << "\", chambers to length " << cfg.max_len << "\n";
           table_text(os, rep);
         });
    return 0;
  }

  // The finite buildings are pinned in place (their delta caches are not
  // movable), so each branch builds and reports locally.
  auto emit_finite = [&](const FiniteBuilding& b, const BuildingAutomorphism& phi) {
    DisplacementReport rep = disp_sup(b, phi);
    emit(format,
         json{{"building", cfg.building},
              {"map", phi.name},
              {"chambers_scanned", b.num_chambers()},
              {"table", table_json(rep)}},
         [&](std::ostream& os) {
           os << cfg.building << " building, map " << phi.name << ", all "
              << b.num_chambers() << " chambers\n";
           table_text(os, rep);
         });
    return 0;
  };

  if (cfg.building == "fano") {
    MgonBuilding b = MgonBuilding::from_geometry(fano_plane());
    std::string map = cfg.map.empty() ? "shift" : cfg.map;
    if (map == "shift") return emit_finite(b, b.collineation("shift", fano_shift_maps()));
    if (map == "duality") {
      auto found = find_duality(b.geometry());
      if (!found) throw SoundnessError("no duality found for the plane");
      return emit_finite(b, b.duality("duality", found->first, found->second));
    }
    throw ParseError("fano maps: shift, duality; got '" + map + "'");
  }
  if (cfg.building == "quadrangle") {
    QuadrangleF2 q = symplectic_quadrangle_f2();
    MgonBuilding b = MgonBuilding::from_geometry(q.geom);
    std::string map = cfg.map.empty() ? "duality" : cfg.map;
    if (map == "duality") {
      auto found = find_duality(q.geom);
      if (!found) throw SoundnessError("no duality found for the quadrangle");
      return emit_finite(b, b.duality("duality", found->first, found->second));
    }
    if (map == "elation")
      return emit_finite(b, b.collineation("elation", central_elation_maps(
                                                          q, parse_center(cfg.center_bits))));
    throw ParseError("quadrangle maps: duality, elation; got '" + map + "'");
  }
  if (cfg.building == "symplectic") {
    std::string map = cfg.map.empty() ? "polarity" : cfg.map;
    if (map != "polarity")
      throw ParseError("symplectic maps: polarity; got '" + map + "'");
    SymplecticFlagBuilding b = SymplecticFlagBuilding::build(2);
    return emit_finite(b, b.symplectic_polarity());
  }
  throw ParseError("buildings: fano, quadrangle, symplectic, tree, thin; got '" +
                   cfg.building + "'");
}

int cmd_disp_trace(const DispConfig& cfg, const std::string& format) {
  if (cfg.building != "tree")
    throw ParseError("traces run on the tree; got building '" + cfg.building + "'");
  TreeBuilding tree(cfg.q);
  BuildingAutomorphism phi = tree.subtree_swap(cfg.addr, cfg.child_a, cfg.child_b);
  std::vector<StepCertificate> trace =
      displacement_trace(tree, phi, tree.chamber(cfg.start), cfg.steps);
  json steps = json::array();
  for (const StepCertificate& cert : trace) steps.push_back(step_json(tree, cert));
  emit(format,
       json{{"building", "tree"},
            {"map", phi.name},
            {"start", cfg.start},
            {"steps", steps}},
       [&](std::ostream& os) {
         os << "trace on the tree from " << cfg.start << " under " << phi.name << "\n";
         for (std::size_t i = 0; i < trace.size(); ++i) {
           const StepCertificate& cert = trace[i];
           os << "  step " << i + 1 << ": " << tree.key_of(cert.start) << " -> "
              << tree.key_of(cert.moved) << "  (" << cert.rule << ", "
              << cert.before.length() << " -> " << cert.after.length() << ")\n";
         }
         os << "  displacement rose " << trace.front().before.length() << " -> "
            << trace.back().after.length() << " over " << trace.size() << " steps\n";
       });
  return 0;
}

// ----- verify subcommands -----

int cmd_verify_corollary3(const std::string& format) {
  MgonBuilding plane = MgonBuilding::from_geometry(fano_plane());
  MgonBoundsReport shift =
      verify_mgon_bounds(plane, plane.collineation("shift", fano_shift_maps()));

  QuadrangleF2 q = symplectic_quadrangle_f2();
  MgonBuilding quad = MgonBuilding::from_geometry(q.geom);
  auto found = find_duality(q.geom);
  if (!found) throw SoundnessError("no duality found for the quadrangle");
  MgonBoundsReport dual =
      verify_mgon_bounds(quad, quad.duality("duality", found->first, found->second));
  MgonBoundsReport elation = verify_mgon_bounds(
      quad, quad.collineation("elation", central_elation_maps(q, 0b0001)));

  bool pass = shift.ok() && dual.ok() && elation.ok();
  json cases = json::array();
  cases.push_back(
      {{"building", "fano"}, {"map", "shift"}, {"report", bounds_json(shift)}});
  cases.push_back(
      {{"building", "quadrangle"}, {"map", "duality"}, {"report", bounds_json(dual)}});
  cases.push_back(
      {{"building", "quadrangle"}, {"map", "elation"}, {"report", bounds_json(elation)}});
  emit(format, json{{"cases", cases}, {"pass", pass}},
       [&](std::ostream& os) {
         auto line = [&os](const char* name, const MgonBoundsReport& r) {
           os << "  " << name << ": m = " << r.m << ", "
              << (r.type_preserving ? "type-preserving" : "type-reversing")
              << ", max displacement " << r.table.max_displacement
              << (r.guarantee_full ? " (full value forced by parity)" : "") << " -> "
              << (r.ok() ? "ok" : "FAIL") << "\n";
         };
         os << "polygon displacement bounds\n";
         line("fano shift", shift);
         line("quadrangle duality", dual);
         line("quadrangle elation", elation);
         os << (pass ? "pass" : "FAIL") << "\n";
       });
  return pass ? 0 : 1;
}

int cmd_verify_example1(unsigned n, const std::string& format) {
  if (n != 2)
    throw PreconditionError("only n = 2 is built at desk scale (315 chambers)");
  SymplecticFlagBuilding b = SymplecticFlagBuilding::build(n);
  PolarityReport rep = verify_polarity(b);
  bool pass = rep.ok();
  emit(format,
       json{{"chambers", rep.chambers},
            {"non_opposite_by_weyl", rep.non_opposite_by_weyl},
            {"non_opposite_by_subspaces", rep.non_opposite_by_subspaces},
            {"isotropic_lines", rep.isotropic_lines},
            {"criteria_agree_on_all_pairs", rep.criteria_agree_on_all_pairs},
            {"opposite_pairs", rep.chambers - rep.non_opposite_by_weyl},
            {"table", table_json(rep.table)},
            {"pass", pass}},
       [&](std::ostream& os) {
         os << "symplectic polarity on " << rep.chambers << " chambers\n"
            << "  non-opposite by Weyl distance: " << rep.non_opposite_by_weyl << "/"
            << rep.chambers << "\n"
            << "  non-opposite by subspace test: " << rep.non_opposite_by_subspaces
            << "/" << rep.chambers << "\n"
            << "  lines inside their own perp:   " << rep.isotropic_lines << "/"
            << rep.chambers << "\n"
            << "  criteria agree on all pairs:   "
            << (rep.criteria_agree_on_all_pairs ? "yes" : "NO") << "\n";
         table_text(os, rep.table);
         os << (pass ? "pass" : "FAIL") << "\n";
       });
  return pass ? 0 : 1;
}

int cmd_verify_remark2(const std::string& format) {
  ThinTranslationReport rep = verify_thin_translation(10);
  bool pass = rep.ok();
  emit(format,
       json{{"chambers_checked", rep.chambers_checked},
            {"all_displacements_two", rep.all_displacements_two},
            {"step_raises_thickness_error", rep.step_raises_thickness_error},
            {"pass", pass}},
       [&](std::ostream& os) {
         os << "thin infinite dihedral complex, translation by \"s t\"\n"
            << "  chambers checked: " << rep.chambers_checked << "\n"
            << "  every displacement equals 2: "
            << (rep.all_displacements_two ? "yes" : "NO") << "\n"
            << "  improvement step refuses thin panels: "
            << (rep.step_raises_thickness_error ? "yes" : "NO") << "\n"
            << (pass ? "pass" : "FAIL") << "\n";
       });
  return pass ? 0 : 1;
}

int cmd_verify_remark5(const std::string& center_bits, const std::string& format) {
  QuadrangleF2 q = symplectic_quadrangle_f2();
  MgonBuilding b = MgonBuilding::from_geometry(q.geom);
  f2::Vec center = parse_center(center_bits);
  if (!q.point_index.count(center))
    throw ParseError("center '" + center_bits + "' is not a point of the quadrangle");
  FixedBallReport rep =
      verify_fixed_ball(b, "elation", central_elation_maps(q, center),
                        GeomVertex{false, q.point_index.at(center)});
  bool pass = rep.ok();
  emit(format,
       json{{"center", center_bits},
            {"radius", rep.radius},
            {"ball_size", rep.ball_size},
            {"ball_fixed", rep.ball_fixed},
            {"map_is_identity", rep.map_is_identity},
            {"other_type_max_move", rep.other_type_max_move},
            {"other_type_bound_ok", rep.other_type_bound_ok},
            {"displacement_is_m_minus_1", rep.displacement_is_m_minus_1},
            {"table", table_json(rep.table)},
            {"pass", pass}},
       [&](std::ostream& os) {
         os << "central elation of the quadrangle at point " << center_bits << "\n"
            << "  ball of radius " << rep.radius << " (" << rep.ball_size
            << " vertices) fixed pointwise: " << (rep.ball_fixed ? "yes" : "NO") << "\n"
            << "  max move of the other type: " << rep.other_type_max_move
            << " (bound " << b.gon() - 2 << ")\n";
         table_text(os, rep.table);
         os << (pass ? "pass" : "FAIL") << "\n";
       });
  return pass ? 0 : 1;
}

int cmd_verify_all(const std::string& format) {
  std::vector<CriterionResult> results = run_acceptance();
  bool all = true;
  for (const CriterionResult& r : results) all = all && r.pass;
  if (format == "json") {
    json arr = json::array();
    for (const CriterionResult& r : results)
      arr.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
    std::cout << json{{"criteria", arr}, {"pass", all}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      const CriterionResult& r = results[i];
      std::printf("[%s] %zu %-24s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", i + 1,
                  r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%s\n", all ? "all 9 criteria passed" : "FAILURES PRESENT");
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter words, cone charts, buildings, displacement"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::string file, word, word2;
  std::size_t max_len = 8;
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string out_path;
  unsigned n = 2;
  DispConfig disp;
  int rc = 0;

  // ----- coxeter -----
  CLI::App* cox = app.add_subcommand("coxeter", "word-engine queries");
  cox->require_subcommand(1);
  cox->fallthrough();

  CLI::App* info = cox->add_subcommand("info", "rank, matrix, classification");
  info->fallthrough();
  info->add_option("file", file, "system file")->required();
  info->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    json comps = json::array();
    for (const Component& c : sys.components()) {
      std::vector<std::string> gens;
      for (std::size_t g : c.gens) gens.push_back(sys.matrix().label(g));
      comps.push_back({{"generators", gens},
                       {"finite", c.finite},
                       {"type", c.finite ? c.type : "infinite"}});
    }
    emit(format,
         json{{"rank", sys.rank()},
              {"labels", sys.matrix().labels()},
              {"components", comps},
              {"finite", sys.is_finite()},
              {"purely_infinite", sys.is_purely_infinite()}},
         [&](std::ostream& os) {
           os << "rank " << sys.rank() << ", generators:";
           for (const std::string& l : sys.matrix().labels()) os << " " << l;
           os << "\n";
           for (std::size_t i = 0; i < sys.rank(); ++i) {
             os << "  ";
             for (std::size_t j = 0; j < sys.rank(); ++j) {
               MOrder m = sys.matrix().m(i, j);
               os << (m.is_inf() ? std::string("inf") : std::to_string(m.order()))
                  << (j + 1 < sys.rank() ? " " : "\n");
             }
           }
           for (const Component& c : sys.components()) {
             os << "  component {";
             for (std::size_t k = 0; k < c.gens.size(); ++k)
               os << (k ? " " : "") << sys.matrix().label(c.gens[k]);
             os << "}: " << (c.finite ? c.type : "infinite") << "\n";
           }
           os << (sys.is_purely_infinite() ? "purely infinite\n"
                  : sys.is_finite()        ? "finite\n"
                                           : "mixed components\n");
         });
  });

  CLI::App* reduce = cox->add_subcommand("reduce", "canonical form of a word");
  reduce->fallthrough();
  reduce->add_option("file", file)->required();
  reduce->add_option("word", word, "space-separated generator labels")->required();
  reduce->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    Element e = sys.element(word);
    emit(format,
         json{{"input", word}, {"canonical", sys.format(e)}, {"length", e.length()}},
         [&](std::ostream& os) { os << sys.format(e) << "\n"; });
  });

  CLI::App* equal = cox->add_subcommand("equal", "do two words name one element?");
  equal->fallthrough();
  equal->add_option("file", file)->required();
  equal->add_option("word", word)->required();
  equal->add_option("other", word2)->required();
  equal->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    bool same = sys.element(word) == sys.element(word2);
    emit(format, json{{"equal", same}},
         [&](std::ostream& os) { os << (same ? "equal" : "distinct") << "\n"; });
    rc = same ? 0 : 1;
  });

  CLI::App* length = cox->add_subcommand("length", "reduced length of a word");
  length->fallthrough();
  length->add_option("file", file)->required();
  length->add_option("word", word)->required();
  length->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    std::size_t l = sys.element(word).length();
    emit(format, json{{"length", l}}, [&](std::ostream& os) { os << l << "\n"; });
  });

  CLI::App* longest = cox->add_subcommand("longest", "longest element (finite only)");
  longest->fallthrough();
  longest->add_option("file", file)->required();
  longest->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    Element w0 = sys.longest_element();
    emit(format, json{{"word", sys.format(w0)}, {"length", w0.length()}},
         [&](std::ostream& os) {
           os << sys.format(w0) << "  (length " << w0.length() << ")\n";
         });
  });

  // ----- witness -----
  CLI::App* wit = app.add_subcommand("witness", "witness generator with certificates");
  wit->fallthrough();
  wit->add_option("file", file)->required();
  wit->add_option("word", word)->required();
  wit->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    WitnessResult r = find_witness(sys, sys.element(word));
    emit(format, certificate_json(sys, r), [&](std::ostream& os) {
      os << "witness: " << sys.matrix().label(r.generator) << "\n"
         << "path: " << r.path << "\n"
         << "l(w) = " << r.certs.len_w << ", l(sw) = " << r.certs.len_sw << "\n"
         << "conjugate is a generator: "
         << (r.certs.conjugate_is_generator ? "yes" : "no") << "\n";
      if (!r.certs.conjugate.is_identity())
        os << "conjugate: " << sys.format(r.certs.conjugate) << "\n";
    });
  });

  // ----- cone -----
  CLI::App* cone = app.add_subcommand("cone", "chart cells and antipode probe");
  cone->require_subcommand(1);
  cone->fallthrough();

  CLI::App* cexport = cone->add_subcommand("export", "CSV of cells with side signs");
  cexport->fallthrough();
  cexport->add_option("file", file)->required();
  cexport->add_option("--max-len", max_len, "chamber word length bound")
      ->capture_default_str();
  cexport->add_option("--tolerance", tolerance)->capture_default_str();
  cexport->add_option("--out", out_path, "write CSV here instead of stdout");
  cexport->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    if (out_path.empty()) {
      export_cells_csv(std::cout, sys, max_len, tolerance);
    } else {
      std::ofstream os(out_path);
      if (!os) throw ParseError("cannot open '" + out_path + "' for writing");
      export_cells_csv(os, sys, max_len, tolerance);
    }
  });

  CLI::App* cprobe = cone->add_subcommand(
      "probe", "sample cells, test negatives against the region");
  cprobe->fallthrough();
  cprobe->add_option("file", file)->required();
  cprobe->add_option("--max-len", max_len)->capture_default_str();
  cprobe->add_option("--samples", samples, "samples per cell")->capture_default_str();
  cprobe->add_option("--seed", seed)->capture_default_str();
  cprobe->add_option("--tolerance", tolerance)->capture_default_str();
  cprobe->callback([&] {
    CoxeterSystem sys = parse_system_file(file);
    AntipodeProbeReport rep = antipode_probe(sys, max_len, samples, seed, tolerance);
    emit(format,
         json{{"cells_sampled", rep.cells_sampled},
              {"samples", rep.samples},
              {"violations", rep.violations.size()},
              {"clean", rep.clean()}},
         [&](std::ostream& os) {
           os << rep.cells_sampled << " cells, " << rep.samples << " samples, "
              << rep.violations.size() << " violations\n";
           if (!rep.clean()) {
             const ProbeViolation& v = rep.violations.front();
             os << "  first: cell (" << sys.format(v.cell.rep) << ", {";
             for (std::size_t k = 0; k < v.cell.J.size(); ++k)
               os << (k ? " " : "") << sys.matrix().label(v.cell.J[k]);
             os << "}) has its negative in the closed chamber of "
                << sys.format(v.chamber) << "\n";
           }
         });
    rc = rep.clean() ? 0 : 1;
  });

  // ----- disp -----
  CLI::App* dsp = app.add_subcommand("disp", "displacement tables and traces");
  dsp->require_subcommand(1);
  dsp->fallthrough();

  auto add_building_options = [&](CLI::App* sub) {
    sub->add_option("--building", disp.building,
                    "fano | quadrangle | symplectic | tree | thin")
        ->capture_default_str();
    sub->add_option("--map", disp.map,
                    "fano: shift|duality; quadrangle: duality|elation; "
                    "symplectic: polarity");
    sub->add_option("--q", disp.q, "tree branching (panels have q+1 chambers)")
        ->capture_default_str();
    sub->add_option("--center", disp.center_bits, "elation center, binary")
        ->capture_default_str();
    sub->add_option("--word", disp.word, "thin translation word")
        ->capture_default_str();
    sub->add_option("--addr", disp.addr, "tree vertex whose subtrees swap")
        ->capture_default_str();
    sub->add_option("--first", disp.child_a, "first swapped child")
        ->capture_default_str();
    sub->add_option("--second", disp.child_b, "second swapped child")
        ->capture_default_str();
  };

  CLI::App* dtable = dsp->add_subcommand("table", "displacement of every chamber");
  dtable->fallthrough();
  add_building_options(dtable);
  dtable->add_option("--radius", disp.radius, "tree region radius")
      ->capture_default_str();
  dtable->add_option("--max-len", disp.max_len, "thin chamber length bound")
      ->capture_default_str();
  dtable->callback([&] { rc = cmd_disp_table(disp, format); });

  CLI::App* dtrace = dsp->add_subcommand("trace", "iterated improvement steps");
  dtrace->fallthrough();
  add_building_options(dtrace);
  dtrace->add_option("--steps", disp.steps)->capture_default_str();
  dtrace->add_option("--start", disp.start, "start chamber key")
      ->capture_default_str();
  dtrace->callback([&] { rc = cmd_disp_trace(disp, format); });

  // ----- verify -----
  CLI::App* verify = app.add_subcommand("verify", "checked reports; exit 0 iff pass");
  verify->require_subcommand(1);
  verify->fallthrough();

  CLI::App* vcor = verify->add_subcommand("corollary3", "polygon displacement bounds");
  vcor->fallthrough();
  vcor->callback([&] { rc = cmd_verify_corollary3(format); });

  CLI::App* vex = verify->add_subcommand("example1", "polarity non-opposition");
  vex->fallthrough();
  vex->add_option("--n", n, "half-dimension of the symplectic space")
      ->capture_default_str();
  vex->callback([&] { rc = cmd_verify_example1(n, format); });

  CLI::App* vr2 = verify->add_subcommand("remark2", "bounded thin translation");
  vr2->fallthrough();
  vr2->callback([&] { rc = cmd_verify_remark2(format); });

  CLI::App* vr5 = verify->add_subcommand("remark5", "fixed ball around an elation");
  vr5->fallthrough();
  vr5->add_option("--center", disp.center_bits)->capture_default_str();
  vr5->callback([&] { rc = cmd_verify_remark5(disp.center_bits, format); });

  CLI::App* vall = verify->add_subcommand("all", "the full acceptance suite");
  vall->fallthrough();
  vall->callback([&] { rc = cmd_verify_all(format); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
