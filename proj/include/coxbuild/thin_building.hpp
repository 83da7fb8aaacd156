#pragma once

// The thin chamber system of a Coxeter system: chambers are the group
// elements themselves, w and ws are s-adjacent, and the Weyl distance is
// w^{-1} w'. Works for infinite groups by registering chambers on demand.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "coxbuild/building.hpp"

namespace coxbuild {

class ThinBuilding : public Building {
 public:
  explicit ThinBuilding(CoxeterSystem sys) : sys_(std::move(sys)) {
    chamber(Element{});  // id 0 is the identity chamber
  }

  const CoxeterSystem& system() const override { return sys_; }
  std::string family() const override { return "thin"; }
  bool finite() const override { return sys_.is_finite(); }

  // Id of the chamber of w, registering it on first sight.
  ChamberId chamber(const Element& w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    ChamberId id = static_cast<ChamberId>(elements_.size());
    elements_.push_back(w);
    ids_.emplace(w, id);
    return id;
  }

  Element element_of(ChamberId c) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (c >= elements_.size())
      throw PreconditionError("chamber id " + std::to_string(c) + " not registered");
    return elements_[c];
  }

  std::vector<ChamberId> panel(ChamberId c, std::size_t s) const override {
    if (s >= sys_.rank())
      throw PreconditionError("generator index " + std::to_string(s) + " out of range");
    ChamberId other = chamber(sys_.mul(element_of(c), s));
    std::vector<ChamberId> p{c, other};
    if (p[0] > p[1]) std::swap(p[0], p[1]);
    return p;
  }

  Element delta(ChamberId a, ChamberId b) const override {
    return sys_.mul(sys_.inverse(element_of(a)), element_of(b));
  }

  std::string chamber_label(ChamberId c) const override {
    Element w = element_of(c);
    return w.is_identity() ? "1" : sys_.format(w);
  }

  // Registered so far; grows as panels are explored.
  std::size_t chambers_materialized() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return elements_.size();
  }

 private:
  CoxeterSystem sys_;
  mutable std::mutex mutex_;
  mutable std::vector<Element> elements_;
  mutable std::map<Element, ChamberId> ids_;
};

// Left translation by g: w -> g w. Weyl distances are untouched, so this
// is a type-preserving automorphism. The building must outlive the map.
inline BuildingAutomorphism left_translation(const ThinBuilding& b, const Element& g) {
  std::vector<std::size_t> sigma(b.system().rank());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  std::string name = "left*" + (g.is_identity() ? std::string("1") : b.system().format(g));
  return {std::move(name), std::move(sigma), [&b, g](ChamberId c) {
            return b.chamber(b.system().mul(g, b.element_of(c)));
          }};
}

}  // namespace coxbuild
