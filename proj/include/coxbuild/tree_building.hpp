#pragma once

// The (q+1)-regular tree as a thick chamber system over the infinite
// dihedral group: chambers are edges, the two panels of an edge are its
// endpoints, and the Weyl distance is the alternating word of endpoint
// types crossed along the arc between two edges.
//
// Vertices are addressed by strings: "s" and "t" are the endpoints of the
// base edge, and appending a digit 0..q-1 descends to a child. Every
// non-root vertex address also names the chamber for the edge joining it
// to its parent; the base edge is named "base".

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "coxbuild/building.hpp"

namespace coxbuild {

class TreeBuilding : public Building {
 public:
  explicit TreeBuilding(unsigned q) : q_(q), sys_(make_dihedral(MOrder::inf())) {
    if (q < 2 || q > 9)
      throw PreconditionError("tree thickness parameter must be in 2..9");
    chamber("base");  // id 0
  }

  unsigned branching() const { return q_; }
  const CoxeterSystem& system() const override { return sys_; }
  std::string family() const override { return "tree"; }
  bool finite() const override { return false; }

  // Id of the edge named by key, registering it on first sight.
  ChamberId chamber(const std::string& key) const {
    check_key(key);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    ChamberId id = static_cast<ChamberId>(keys_.size());
    keys_.push_back(key);
    ids_.emplace(key, id);
    return id;
  }

  std::string key_of(ChamberId c) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (c >= keys_.size())
      throw PreconditionError("chamber id " + std::to_string(c) + " not registered");
    return keys_[c];
  }

  std::string chamber_label(ChamberId c) const override { return key_of(c); }

  // 0 for the side of the "s" root, 1 for the "t" side.
  std::size_t vertex_side(const std::string& v) const {
    std::size_t base = v[0] == 's' ? 0 : 1;
    return base ^ ((v.size() - 1) & 1);
  }

  std::pair<std::string, std::string> endpoints(ChamberId c) const {
    std::string key = key_of(c);
    if (key == "base") return {"s", "t"};
    return {key.substr(0, key.size() - 1), key};
  }

  std::vector<ChamberId> panel(ChamberId c, std::size_t s) const override {
    if (s >= 2)
      throw PreconditionError("generator index " + std::to_string(s) + " out of range");
    auto [a, b] = endpoints(c);
    const std::string& v = vertex_side(a) == s ? a : b;
    std::vector<ChamberId> out;
    if (v.size() == 1) out.push_back(chamber("base"));
    else out.push_back(chamber(v));
    for (unsigned d = 0; d < q_; ++d)
      out.push_back(chamber(v + static_cast<char>('0' + d)));
    std::sort(out.begin(), out.end());
    return out;
  }

  Element delta(ChamberId a, ChamberId b) const override {
    if (a == b) return Element{};
    auto [a1, a2] = endpoints(a);
    auto [b1, b2] = endpoints(b);
    // Crossing vertices: the arc between the nearest endpoints, inclusive.
    auto nearer = [&](const std::string& x, const std::string& y,
                      const std::string& p, const std::string& q) {
      std::size_t dx = std::min(vertex_distance(x, p), vertex_distance(x, q));
      std::size_t dy = std::min(vertex_distance(y, p), vertex_distance(y, q));
      return dx <= dy ? x : y;
    };
    std::string an = nearer(a1, a2, b1, b2);
    std::string bn = nearer(b1, b2, a1, a2);
    Word word;
    for (const std::string& v : vertex_path(an, bn))
      word.push_back(static_cast<Letter>(vertex_side(v)));
    return sys_.reduce(word);
  }

  std::size_t vertex_distance(const std::string& x, const std::string& y) const {
    return vertex_path(x, y).size() - 1;
  }

  // The unique arc from x to y, both included.
  std::vector<std::string> vertex_path(const std::string& x, const std::string& y) const {
    check_vertex(x);
    check_vertex(y);
    std::vector<std::string> out;
    if (x[0] == y[0]) {
      std::size_t cp = 0;
      while (cp < x.size() && cp < y.size() && x[cp] == y[cp]) ++cp;
      for (std::size_t k = x.size(); k > cp; --k) out.push_back(x.substr(0, k));
      out.push_back(x.substr(0, cp));
      for (std::size_t k = cp + 1; k <= y.size(); ++k) out.push_back(y.substr(0, k));
    } else {
      for (std::size_t k = x.size(); k >= 1; --k) out.push_back(x.substr(0, k));
      for (std::size_t k = 1; k <= y.size(); ++k) out.push_back(y.substr(0, k));
    }
    return out;
  }

  std::size_t chambers_materialized() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return keys_.size();
  }

  // The automorphism exchanging the subtrees below children i and j of the
  // vertex at addr, fixing everything else. Type-preserving. The building
  // must outlive the returned map.
  BuildingAutomorphism subtree_swap(const std::string& addr, unsigned i,
                                    unsigned j) const {
    check_vertex(addr);
    if (i >= q_ || j >= q_ || i == j)
      throw PreconditionError("subtree swap needs two distinct children");
    std::string pi = addr + static_cast<char>('0' + i);
    std::string pj = addr + static_cast<char>('0' + j);
    auto rewrite = [pi, pj](const std::string& key) {
      if (key.rfind(pi, 0) == 0) return pj + key.substr(pi.size());
      if (key.rfind(pj, 0) == 0) return pi + key.substr(pj.size());
      return key;
    };
    return {"swap(" + pi + "," + pj + ")",
            {0, 1},
            [this, rewrite](ChamberId c) { return chamber(rewrite(key_of(c))); }};
  }

 private:
  void check_vertex(const std::string& v) const {
    if (v.empty() || (v[0] != 's' && v[0] != 't'))
      throw PreconditionError("vertex address must start with 's' or 't'");
    for (std::size_t k = 1; k < v.size(); ++k)
      if (v[k] < '0' || v[k] >= static_cast<char>('0' + q_))
        throw PreconditionError("vertex address digit out of range in '" + v + "'");
  }
  void check_key(const std::string& key) const {
    if (key == "base") return;
    check_vertex(key);
    if (key.size() < 2)
      throw PreconditionError("'" + key + "' names a vertex, not an edge");
  }

  unsigned q_;
  CoxeterSystem sys_;
  mutable std::mutex mutex_;
  mutable std::vector<std::string> keys_;
  mutable std::map<std::string, ChamberId> ids_;
};

}  // namespace coxbuild
