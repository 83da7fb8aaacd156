#pragma once

// Exact reference models used only for verification: small groups realized
// as permutations or integer affine maps, with Cayley-graph BFS giving an
// independent notion of word length. The word engine never consults these;
// they exist so tests and the acceptance suite can check it from outside.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "coxbuild/coxeter.hpp"

namespace coxbuild::oracle {

// Elements are encoded as integer vectors; `compose(f, g)` is the map
// "apply g, then f", matching left-to-right word products f·g.
struct Group {
  std::vector<std::vector<long long>> gens;
  std::vector<long long> identity;
  std::function<std::vector<long long>(const std::vector<long long>&,
                                       const std::vector<long long>&)>
      compose;
};

// Permutations of {0..k-1} as image tables.
inline Group perm_group(std::vector<std::vector<long long>> gens) {
  Group g;
  const std::size_t k = gens.front().size();
  g.gens = std::move(gens);
  g.identity.resize(k);
  for (std::size_t i = 0; i < k; ++i) g.identity[i] = static_cast<long long>(i);
  g.compose = [](const std::vector<long long>& f, const std::vector<long long>& h) {
    std::vector<long long> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[h[i]];
    return out;
  };
  return g;
}

inline Group symmetric_group_adjacent(unsigned points) {
  std::vector<std::vector<long long>> gens;
  for (unsigned i = 0; i + 1 < points; ++i) {
    std::vector<long long> t(points);
    for (unsigned j = 0; j < points; ++j) t[j] = j;
    std::swap(t[i], t[i + 1]);
    gens.push_back(std::move(t));
  }
  return perm_group(std::move(gens));
}

inline Group square_symmetries() {
  // Corners 0..3 in cyclic order; an edge reflection and a diagonal one.
  return perm_group({{1, 0, 3, 2}, {0, 3, 2, 1}});
}

// Isometries of Z generated by the reflections at 0 and 1/2, encoded as
// x -> a*x + b with a = +-1. An exact model of the infinite dihedral group.
inline Group integer_isometries() {
  Group g;
  g.gens = {{-1, 0}, {-1, 1}};
  g.identity = {1, 0};
  g.compose = [](const std::vector<long long>& f, const std::vector<long long>& h) {
    return std::vector<long long>{f[0] * h[0], f[0] * h[1] + f[1]};
  };
  return g;
}

// Affine maps of {x in Z^3 : x0+x1+x2 = 0} of the form x_i -> x_{pi(i)} + c_i,
// encoded as [pi(0), pi(1), pi(2), c0, c1, c2]. The three generators are the
// two coordinate swaps and one affine reflection; they satisfy the triangle
// of order-3 bonds and generate an infinite group.
inline Group affine_triangle() {
  Group g;
  g.gens = {
      {1, 0, 2, 0, 0, 0},    // swap x0, x1
      {0, 2, 1, 0, 0, 0},    // swap x1, x2
      {2, 1, 0, -1, 0, 1},   // x -> (x2 - 1, x1, x0 + 1)
  };
  g.identity = {0, 1, 2, 0, 0, 0};
  g.compose = [](const std::vector<long long>& f, const std::vector<long long>& h) {
    // (f o h)(x)_i = h(x)_{pi_f(i)} + c_f(i)
    std::vector<long long> out(6);
    for (std::size_t i = 0; i < 3; ++i) {
      long long j = f[i];
      out[i] = h[j];
      out[3 + i] = h[3 + j] + f[3 + i];
    }
    return out;
  };
  return g;
}

// Direct product, elements concatenated. Generator list: all of a's, then
// all of b's, matching a block-diagonal Coxeter matrix.
inline Group direct_sum(const Group& a, const Group& b) {
  Group g;
  auto glue = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
    std::vector<long long> out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  for (const auto& ga : a.gens) g.gens.push_back(glue(ga, b.identity));
  for (const auto& gb : b.gens) g.gens.push_back(glue(a.identity, gb));
  g.identity = glue(a.identity, b.identity);
  const std::size_t na = a.identity.size();
  g.compose = [na, ca = a.compose, cb = b.compose](const std::vector<long long>& f,
                                                   const std::vector<long long>& h) {
    std::vector<long long> fa(f.begin(), f.begin() + na), fb(f.begin() + na, f.end());
    std::vector<long long> ha(h.begin(), h.begin() + na), hb(h.begin() + na, h.end());
    std::vector<long long> out = ca(fa, ha);
    std::vector<long long> tail = cb(fb, hb);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  };
  return g;
}

inline std::vector<long long> eval_word(const Group& g, const Word& w) {
  std::vector<long long> cur = g.identity;
  for (Letter l : w) cur = g.compose(cur, g.gens.at(l));
  return cur;
}

// Distances from the identity in the Cayley graph, breadth first, out to
// the given radius.
inline std::map<std::vector<long long>, unsigned> cayley_ball(const Group& g,
                                                              unsigned radius) {
  std::map<std::vector<long long>, unsigned> dist{{g.identity, 0}};
  std::vector<std::vector<long long>> frontier{g.identity};
  for (unsigned d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<std::vector<long long>> next;
    for (const auto& e : frontier)
      for (const auto& gen : g.gens) {
        auto prod = g.compose(e, gen);
        if (dist.emplace(prod, d).second) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace coxbuild::oracle
