#pragma once

// W-metric chamber systems: the abstract interface, a finite implementation
// with cached Weyl-distance rows, diagram automorphisms, and validators for
// the defining axioms.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxbuild/coxeter.hpp"

namespace coxbuild {

using ChamberId = std::uint32_t;

class Building {
 public:
  virtual ~Building() = default;
  virtual const CoxeterSystem& system() const = 0;
  virtual std::string family() const = 0;
  virtual bool finite() const = 0;
  // All chambers sharing the s-panel of c, including c itself, sorted by id.
  virtual std::vector<ChamberId> panel(ChamberId c, std::size_t s) const = 0;
  virtual Element delta(ChamberId a, ChamberId b) const = 0;
  virtual std::string chamber_label(ChamberId c) const = 0;

  std::size_t distance(ChamberId a, ChamberId b) const { return delta(a, b).length(); }
  bool spherical() const { return system().is_finite(); }
  bool opposite(ChamberId a, ChamberId b) const {
    if (!spherical())
      throw PreconditionError("opposition is defined only in spherical buildings");
    return delta(a, b) == system().longest_element();
  }
};

// Chambers are 0..n-1; panels are a stored partition per type; Weyl
// distances come from breadth-first gallery search with per-source rows
// cached. In a genuine building the value is independent of the galleries
// chosen; for arbitrary chamber systems it is the BFS-first convention,
// which the validator then tests against the axioms.
class FiniteBuilding : public Building {
 public:
  bool finite() const override { return true; }
  std::size_t num_chambers() const { return num_chambers_; }

  std::vector<ChamberId> panel(ChamberId c, std::size_t s) const override {
    check_chamber(c);
    check_type(s);
    return panels_[s][panel_of_[s][c]];
  }

  Element delta(ChamberId a, ChamberId b) const override {
    check_chamber(a);
    check_chamber(b);
    const auto& r = row(a);
    if (!r[b])
      throw PreconditionError("no gallery joins chambers " + std::to_string(a) +
                              " and " + std::to_string(b));
    return *r[b];
  }

  bool connected_from(ChamberId a) const {
    const auto& r = row(a);
    return std::all_of(r.begin(), r.end(), [](const auto& e) { return bool(e); });
  }

  const CoxeterSystem& system() const override { return sys_; }
  std::string family() const override { return family_; }

 protected:
  FiniteBuilding(CoxeterSystem sys, std::string family)
      : sys_(std::move(sys)), family_(std::move(family)) {}

  // Ingest the panel partition: panels[s] lists the s-panels, which must
  // cover 0..count-1 exactly once each.
  void init_panels(std::size_t count,
                   std::vector<std::vector<std::vector<ChamberId>>> panels) {
    num_chambers_ = count;
    panels_ = std::move(panels);
    if (panels_.size() != sys_.rank())
      throw PreconditionError("one panel family per generator required");
    panel_of_.assign(sys_.rank(), std::vector<std::size_t>(count, SIZE_MAX));
    for (std::size_t s = 0; s < sys_.rank(); ++s) {
      for (std::size_t g = 0; g < panels_[s].size(); ++g) {
        std::sort(panels_[s][g].begin(), panels_[s][g].end());
        for (ChamberId c : panels_[s][g]) {
          if (c >= count || panel_of_[s][c] != SIZE_MAX)
            throw PreconditionError("panel families must partition the chambers");
          panel_of_[s][c] = g;
        }
      }
      for (std::size_t c = 0; c < count; ++c)
        if (panel_of_[s][c] == SIZE_MAX)
          throw PreconditionError("panel families must partition the chambers");
    }
  }

 private:
  void check_chamber(ChamberId c) const {
    if (c >= num_chambers_)
      throw PreconditionError("chamber id " + std::to_string(c) + " out of range");
  }
  void check_type(std::size_t s) const {
    if (s >= sys_.rank())
      throw PreconditionError("generator index " + std::to_string(s) + " out of range");
  }

  const std::vector<std::optional<Element>>& row(ChamberId src) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = rows_.find(src);
    if (it != rows_.end()) return it->second;
    std::vector<std::optional<Element>> r(num_chambers_);
    r[src] = Element{};
    std::deque<ChamberId> queue{src};
    while (!queue.empty()) {
      ChamberId d = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < sys_.rank(); ++s)
        for (ChamberId e : panels_[s][panel_of_[s][d]])
          if (!r[e]) {
            r[e] = sys_.mul(*r[d], s);
            queue.push_back(e);
          }
    }
    return rows_.emplace(src, std::move(r)).first->second;
  }

  CoxeterSystem sys_;
  std::string family_;
  std::size_t num_chambers_ = 0;
  std::vector<std::vector<std::vector<ChamberId>>> panels_;  // [s][group] -> ids
  std::vector<std::vector<std::size_t>> panel_of_;           // [s][chamber] -> group
  mutable std::mutex mutex_;
  mutable std::map<ChamberId, std::vector<std::optional<Element>>> rows_;
};

// ----- diagram automorphisms and chamber maps -----

inline bool is_diagram_automorphism(const CoxeterSystem& sys,
                                    const std::vector<std::size_t>& sigma) {
  if (sigma.size() != sys.rank()) return false;
  std::vector<bool> hit(sys.rank(), false);
  for (std::size_t v : sigma) {
    if (v >= sys.rank() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < sys.rank(); ++i)
    for (std::size_t j = 0; j < sys.rank(); ++j)
      if (!(sys.matrix().m(i, j) == sys.matrix().m(sigma[i], sigma[j])))
        return false;
  return true;
}

inline Element apply_diagram(const CoxeterSystem& sys,
                             const std::vector<std::size_t>& sigma,
                             const Element& w) {
  Word mapped;
  mapped.reserve(w.word.size());
  for (Letter l : w.word) mapped.push_back(static_cast<Letter>(sigma.at(l)));
  return sys.reduce(mapped);
}

struct BuildingAutomorphism {
  std::string name;
  std::vector<std::size_t> sigma;  // induced diagram permutation
  std::function<ChamberId(ChamberId)> map;

  bool type_preserving() const {
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (sigma[i] != i) return false;
    return true;
  }
};

inline BuildingAutomorphism identity_automorphism(const Building& b) {
  std::vector<std::size_t> sigma(b.system().rank());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  return {"identity", std::move(sigma), [](ChamberId c) { return c; }};
}

// ----- validation -----

struct ValidationReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void flag_violation(ValidationReport& rep, std::size_t cap, std::string msg) {
  if (rep.violations.size() < cap) rep.violations.push_back(std::move(msg));
  else if (rep.violations.size() == cap) rep.violations.push_back("... (truncated)");
}

}  // namespace detail

// Checks the defining axioms on the full chamber set: panels partition the
// chambers into classes of size >= 2, the complex is gallery-connected,
// Weyl distances are symmetric under inversion, vanish exactly on the
// diagonal, and every panel has a unique gate with the remaining chambers
// one step past it.
inline ValidationReport validate_building(const FiniteBuilding& b,
                                          std::size_t max_violations = 25) {
  ValidationReport rep;
  const CoxeterSystem& sys = b.system();
  const std::size_t n = b.num_chambers();
  auto fail = [&](std::string m) { detail::flag_violation(rep, max_violations, std::move(m)); };

  if (n == 0) {
    rep.violations.push_back("no chambers");
    return rep;
  }

  for (std::size_t s = 0; s < sys.rank(); ++s) {
    std::vector<bool> seen(n, false);
    for (ChamberId c = 0; c < n; ++c) {
      auto p = b.panel(c, s);
      ++rep.checks;
      if (p.size() < 2)
        fail("panel of chamber " + std::to_string(c) + " for generator " +
             sys.matrix().label(s) + " has fewer than two chambers");
      if (!std::binary_search(p.begin(), p.end(), c))
        fail("panel of chamber " + std::to_string(c) + " omits the chamber itself");
      if (!seen[c]) {
        for (ChamberId d : p) {
          if (d >= n || (d != c && seen[d]) ||
              b.panel(d, s) != p) {
            fail("panels for generator " + sys.matrix().label(s) +
                 " do not partition the chambers near " + std::to_string(c));
            break;
          }
          seen[d] = true;
        }
      }
    }
  }

  ++rep.checks;
  if (!b.connected_from(0)) {
    fail("chamber system is not gallery-connected");
    return rep;  // the remaining checks need distances
  }

  for (ChamberId a = 0; a < n; ++a)
    for (ChamberId c = 0; c < n; ++c) {
      Element w = b.delta(a, c);
      ++rep.checks;
      if (w.is_identity() != (a == c))
        fail("Weyl distance vanishes off the diagonal at (" + std::to_string(a) +
             ", " + std::to_string(c) + ")");
      if (!(b.delta(c, a) == sys.inverse(w)))
        fail("Weyl distance is not inverse-symmetric at (" + std::to_string(a) +
             ", " + std::to_string(c) + ")");
    }

  // Gate property per (chamber, panel): unique nearest chamber, everything
  // else exactly one letter past it.
  for (ChamberId a = 0; a < n; ++a)
    for (ChamberId c = 0; c < n; ++c)
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto p = b.panel(c, s);
        std::size_t gates = 0;
        Element gate_delta;
        for (ChamberId e : p) {
          Element w = b.delta(a, e);
          if (sys.mul(w, s).length() > w.length()) {
            ++gates;
            gate_delta = w;
          }
        }
        ++rep.checks;
        if (gates != 1) {
          fail("panel of chamber " + std::to_string(c) + " for generator " +
               sys.matrix().label(s) + " has " + std::to_string(gates) +
               " gates from chamber " + std::to_string(a));
          continue;
        }
        Element past = sys.mul(gate_delta, s);
        for (ChamberId e : p) {
          Element w = b.delta(a, e);
          ++rep.checks;
          if (!(w == gate_delta) && !(w == past))
            fail("chamber " + std::to_string(e) + " in the panel of " +
                 std::to_string(c) + " is neither at the gate distance nor one past it");
        }
      }
  return rep;
}

struct AutomorphismCheckOptions {
  bool exhaustive = true;    // all chamber pairs (finite buildings)
  std::size_t samples = 2000;  // pairs drawn when not exhaustive
  std::uint64_t seed = 0;
  std::size_t max_violations = 25;
};

// Equivariance on an explicit chamber list: delta(phi a, phi b) must equal
// the diagram image of delta(a, b).
inline void check_equivariance_on(const Building& b, const BuildingAutomorphism& phi,
                                  const std::vector<std::pair<ChamberId, ChamberId>>& pairs,
                                  ValidationReport& rep,
                                  std::size_t max_violations = 25) {
  for (auto [x, y] : pairs) {
    ++rep.checks;
    Element expect = apply_diagram(b.system(), phi.sigma, b.delta(x, y));
    Element got = b.delta(phi.map(x), phi.map(y));
    if (!(got == expect))
      detail::flag_violation(
          rep, max_violations,
          "map is not Weyl-equivariant on (" + std::to_string(x) + ", " +
              std::to_string(y) + "): expected " + b.system().format(expect) +
              ", got " + b.system().format(got));
  }
}

inline ValidationReport validate_automorphism(const FiniteBuilding& b,
                                              const BuildingAutomorphism& phi,
                                              AutomorphismCheckOptions opt = {}) {
  ValidationReport rep;
  const std::size_t n = b.num_chambers();
  ++rep.checks;
  if (!is_diagram_automorphism(b.system(), phi.sigma)) {
    rep.violations.push_back("sigma is not a diagram automorphism");
    return rep;
  }
  std::vector<bool> hit(n, false);
  for (ChamberId c = 0; c < n; ++c) {
    ChamberId d = phi.map(c);
    ++rep.checks;
    if (d >= n || hit[d]) {
      detail::flag_violation(rep, opt.max_violations,
                             "chamber map is not a bijection at " + std::to_string(c));
      return rep;
    }
    hit[d] = true;
  }

  std::vector<std::pair<ChamberId, ChamberId>> pairs;
  if (opt.exhaustive) {
    pairs.reserve(n * n);
    for (ChamberId x = 0; x < n; ++x)
      for (ChamberId y = 0; y < n; ++y) pairs.emplace_back(x, y);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<ChamberId> pick(0, static_cast<ChamberId>(n - 1));
    for (std::size_t i = 0; i < opt.samples; ++i)
      pairs.emplace_back(pick(rng), pick(rng));
  }
  check_equivariance_on(b, phi, pairs, rep, opt.max_violations);
  return rep;
}

}  // namespace coxbuild
