#pragma once

// Tiny linear algebra over the two-element field, sized for the rank-4
// symplectic geometry: vectors are bitmasks, subspaces are kept in reduced
// row-echelon form so equal subspaces compare equal.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coxbuild/coxeter.hpp"

namespace coxbuild::f2 {

using Vec = std::uint32_t;  // coordinate i = bit i

inline bool parity(Vec x) { return std::popcount(x) & 1u; }
inline bool dot(Vec u, Vec v) { return parity(u & v); }

inline std::string vec_label(Vec v, std::size_t dim) {
  std::string s(dim, '0');
  for (std::size_t i = 0; i < dim; ++i)
    if (v & (Vec{1} << i)) s[i] = '1';
  return s;
}

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const std::vector<Vec>& span) {
    for (Vec v : span) insert(v);
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(Vec v) const { return reduce(v) == 0; }
  bool contains(const Subspace& other) const {
    for (Vec v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    Subspace s = *this;
    for (Vec v : other.basis_) s.insert(v);
    return s;
  }

  // All 2^dim member vectors, zero first.
  std::vector<Vec> elements() const {
    std::vector<Vec> out;
    out.reserve(std::size_t{1} << dim());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << dim()); ++mask) {
      Vec v = 0;
      for (std::size_t i = 0; i < dim(); ++i)
        if (mask & (1u << i)) v ^= basis_[i];
      out.push_back(v);
    }
    return out;
  }

  void insert(Vec v) {
    v = reduce(v);
    if (v == 0) return;
    basis_.push_back(v);
    normalize();
  }

  // Echelon bases are canonical, so this is subspace equality.
  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  Vec reduce(Vec v) const {
    for (Vec b : basis_)
      if (v & leading_bit(b)) v ^= b;
    return v;
  }
  static Vec leading_bit(Vec v) { return Vec{1} << (31 - std::countl_zero(v)); }
  void normalize() {
    // Sort by descending leading bit, then clear above-pivot entries.
    std::sort(basis_.begin(), basis_.end(), std::greater<Vec>());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (basis_[j] & leading_bit(basis_[i])) basis_[j] ^= basis_[i];
  }

  std::vector<Vec> basis_;  // RREF, pivots descending
};

// F_2^{2n} with the standard alternating form pairing coordinate i with
// coordinate n + i.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t n) : n_(n) {
    if (n == 0 || 2 * n > 16) throw PreconditionError("symplectic rank out of range");
  }

  std::size_t half_rank() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  Vec full_mask() const { return (Vec{1} << dim()) - 1; }

  Vec swap_halves(Vec v) const {
    Vec lo = v & ((Vec{1} << n_) - 1);
    return (lo << n_) | (v >> n_);
  }

  bool form(Vec u, Vec v) const { return dot(swap_halves(u), v); }

  bool is_isotropic(const Subspace& u) const {
    const auto& b = u.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (form(b[i], b[j])) return false;
    return true;
  }

  Subspace orthogonal(const Subspace& u) const {
    std::vector<Vec> span;
    for (Vec v = 0; v <= full_mask(); ++v) {
      bool ok = true;
      for (Vec b : u.basis())
        if (form(b, v)) { ok = false; break; }
      if (ok) span.push_back(v);
    }
    return Subspace(span);
  }

  // The symplectic transvection attached to p: v -> v + B(v, p) p. Linear,
  // invertible (it is an involution), preserves the form, and fixes the
  // hyperplane p-perp pointwise.
  Vec transvection(Vec p, Vec v) const { return form(v, p) ? v ^ p : v; }

  // All k-dimensional subspaces, in a deterministic order.
  std::vector<Subspace> subspaces_of_dim(std::size_t k) const {
    std::vector<Subspace> out;
    build(k, 1, Subspace{}, out);
    return out;
  }

 private:
  void build(std::size_t k, Vec next, const Subspace& cur,
             std::vector<Subspace>& out) const {
    if (cur.dim() == k) {
      out.push_back(cur);
      return;
    }
    for (Vec v = next; v <= full_mask(); ++v) {
      if (cur.contains(v)) continue;
      Subspace bigger = cur;
      bigger.insert(v);
      // Only accept v as the smallest new vector of the extension so each
      // subspace is produced once.
      bool minimal = true;
      for (Vec w = 1; w < v && minimal; ++w)
        if (!cur.contains(w) && bigger.contains(w)) minimal = false;
      if (!minimal) continue;
      build(k, v + 1, bigger, out);
    }
  }

  std::size_t n_;
};

}  // namespace coxbuild::f2
