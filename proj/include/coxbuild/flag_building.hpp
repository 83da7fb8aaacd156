#pragma once

// The building of complete flags of F_2^{2n}, of type A_{2n-1}: chambers
// are chains U_1 < ... < U_{2n-1} with dim U_k = k, and two flags are
// s_k-adjacent when they differ exactly in U_k. Carries the symplectic
// polarity U_k -> (U_{2n-k})-perp, a type-reversing automorphism.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxbuild/building.hpp"
#include "coxbuild/gf2.hpp"

namespace coxbuild {

class SymplecticFlagBuilding : public FiniteBuilding {
 public:
  using Flag = std::vector<f2::Subspace>;  // position k holds dim k+1

  static SymplecticFlagBuilding build(std::size_t n, std::size_t max_flags = 100000) {
    if (n == 0) throw PreconditionError("symplectic rank must be positive");
    std::size_t expected = 1;
    for (std::size_t k = 2; k <= 2 * n; ++k) {
      expected *= (std::size_t{1} << k) - 1;
      if (expected > max_flags)
        throw LimitError("flag count exceeds the cap of " + std::to_string(max_flags));
    }
    return SymplecticFlagBuilding(n);
  }

  const f2::SymplecticSpace& space() const { return space_; }
  const std::vector<Flag>& flags() const { return flags_; }
  const Flag& flag_of(ChamberId c) const { return flags_.at(c); }

  ChamberId chamber_of(const Flag& flag) const {
    auto it = index_.find(flag);
    if (it == index_.end()) throw PreconditionError("chain is not a registered flag");
    return it->second;
  }

  std::string chamber_label(ChamberId c) const override {
    const Flag& f = flag_of(c);
    std::string out = "[";
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k) out += " < ";
      const auto& basis = f[k].basis();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) out += "+";
        out += f2::vec_label(basis[i], space_.dim());
      }
    }
    return out + "]";
  }

  // U_k -> perp of U_{2n-k}; reverses the diagram.
  BuildingAutomorphism symplectic_polarity() const {
    const std::size_t d = space_.dim() - 1;
    auto images = std::make_shared<std::vector<ChamberId>>();
    images->reserve(flags_.size());
    for (const Flag& f : flags_) {
      Flag image(d);
      for (std::size_t k = 0; k < d; ++k) image[k] = space_.orthogonal(f[d - 1 - k]);
      images->push_back(chamber_of(image));
    }
    std::vector<std::size_t> sigma(d);
    for (std::size_t k = 0; k < d; ++k) sigma[k] = d - 1 - k;
    return {"symplectic-polarity", std::move(sigma),
            [images](ChamberId c) { return images->at(c); }};
  }

  // Complementarity at every level: dim(U_k + U'_{2n-k}) = 2n for all k.
  bool opposite_by_subspaces(ChamberId a, ChamberId b) const {
    const Flag& fa = flag_of(a);
    const Flag& fb = flag_of(b);
    for (std::size_t k = 0; k < fa.size(); ++k)
      if (fa[k].sum(fb[fa.size() - 1 - k]).dim() != space_.dim()) return false;
    return true;
  }

 private:
  explicit SymplecticFlagBuilding(std::size_t n)
      : FiniteBuilding(make_type_a(static_cast<unsigned>(2 * n - 1)), "flags"),
        space_(n) {
    const std::size_t d = 2 * n - 1;
    std::vector<std::vector<f2::Subspace>> by_dim(d + 1);
    for (std::size_t k = 1; k <= d; ++k) by_dim[k] = space_.subspaces_of_dim(k);

    Flag chain;
    extend(chain, by_dim, d);
    for (std::size_t i = 0; i < flags_.size(); ++i)
      index_.emplace(flags_[i], static_cast<ChamberId>(i));

    // s_k-panels: flags agreeing everywhere except position k.
    std::vector<std::vector<std::vector<ChamberId>>> panels(d);
    for (std::size_t k = 0; k < d; ++k) {
      std::map<Flag, std::vector<ChamberId>> groups;
      for (std::size_t i = 0; i < flags_.size(); ++i) {
        Flag key = flags_[i];
        key[k] = f2::Subspace{};
        groups[key].push_back(static_cast<ChamberId>(i));
      }
      panels[k].reserve(groups.size());
      for (auto& [key, ids] : groups) panels[k].push_back(std::move(ids));
    }
    init_panels(flags_.size(), std::move(panels));
  }

  void extend(Flag& chain, const std::vector<std::vector<f2::Subspace>>& by_dim,
              std::size_t d) {
    if (chain.size() == d) {
      flags_.push_back(chain);
      return;
    }
    for (const f2::Subspace& next : by_dim[chain.size() + 1]) {
      if (!chain.empty() && !next.contains(chain.back())) continue;
      chain.push_back(next);
      extend(chain, by_dim, d);
      chain.pop_back();
    }
  }

  f2::SymplecticSpace space_;
  std::vector<Flag> flags_;
  std::map<Flag, ChamberId> index_;
};

}  // namespace coxbuild
