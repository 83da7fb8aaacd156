#pragma once

// Witness search: given w != 1 in a system all of whose irreducible factors
// are infinite, find a generator s with l(sw) > l(w) whose conjugate
// w^{-1} s w is not a generator. Such an s always exists there; failing to
// find one is an engine bug, reported as SoundnessError.
//
// Search order mirrors the guarantee's proof shape: project to the first
// diagram component meeting the support, take a missing generator adjacent
// to the support when there is one, and only then scan all generators.

#include <optional>
#include <string>

#include "coxbuild/coxeter.hpp"

namespace coxbuild {

struct WitnessCertificates {
  std::size_t len_w = 0;
  std::size_t len_sw = 0;
  bool conjugate_is_generator = false;  // must be false for a witness
  // Canonical form of w^{-1} s w, filled only when it fits under the word
  // cap; the boolean above is decided without it.
  Element conjugate;
};

struct WitnessResult {
  std::size_t generator = 0;
  // "component-reduction" | "support-fast-path" | "exhaustive-search"
  std::string path;
  WitnessCertificates certs;
};

// Both defining conditions, recomputed from scratch.
inline bool witness_conditions_hold(const CoxeterSystem& sys, std::size_t s,
                                    const Element& w,
                                    WitnessCertificates* out = nullptr) {
  Element sw = sys.mul(s, w);
  bool conj_in_s = sys.conjugate_as_generator(s, w).has_value();
  if (out) {
    out->len_w = w.length();
    out->len_sw = sw.length();
    out->conjugate_is_generator = conj_in_s;
    out->conjugate = 2 * w.length() + 1 <= sys.max_word_length()
                         ? sys.conjugate_generator(s, w)
                         : Element{};
  }
  return sw.length() > w.length() && !conj_in_s;
}

// Fast path for irreducible systems whose support misses a generator: any
// s outside S(w) joined to S(w) by a bond of order >= 3 works. Returns
// nullopt when S(w) = S. The result is re-verified before being returned.
inline std::optional<std::size_t> support_gap_witness(const CoxeterSystem& sys,
                                                      const Element& w) {
  if (w.is_identity()) throw PreconditionError("witness search needs w != 1");
  if (!sys.is_irreducible())
    throw PreconditionError("support_gap_witness needs an irreducible system");
  if (sys.components()[0].finite)
    throw PreconditionError("support_gap_witness needs an infinite system");

  std::vector<std::size_t> sup = sys.support(w);
  if (sup.size() == sys.rank()) return std::nullopt;
  std::vector<bool> in_sup(sys.rank(), false);
  for (std::size_t s : sup) in_sup[s] = true;
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    if (in_sup[s]) continue;
    bool adjacent = std::any_of(sup.begin(), sup.end(), [&](std::size_t t) {
      return sys.matrix().edge(s, t);
    });
    if (!adjacent) continue;
    if (!witness_conditions_hold(sys, s, w))
      throw SoundnessError("support-gap witness failed verification");
    return s;
  }
  // A connected diagram always joins a proper nonempty support to its
  // complement.
  throw SoundnessError("no generator adjacent to the support in a connected diagram");
}

namespace detail {

// Witness search inside one irreducible factor J, against the factor part
// w1 of w. Conditions checked on w1 transfer verbatim to the full element
// because the other factors commute with W_J.
inline std::optional<std::size_t> witness_in_factor(const CoxeterSystem& sys,
                                                    const std::vector<std::size_t>& J,
                                                    const Element& w1) {
  std::vector<std::size_t> sup = sys.support(w1);
  if (sup.size() < J.size()) {
    std::vector<bool> in_sup(sys.rank(), false);
    for (std::size_t s : sup) in_sup[s] = true;
    for (std::size_t s : J) {
      if (in_sup[s]) continue;
      bool adjacent = std::any_of(sup.begin(), sup.end(), [&](std::size_t t) {
        return sys.matrix().edge(s, t);
      });
      if (adjacent) return s;
    }
    return std::nullopt;  // cannot happen on a connected factor
  }
  for (std::size_t s : J)
    if (witness_conditions_hold(sys, s, w1)) return s;
  return std::nullopt;
}

}  // namespace detail

inline WitnessResult find_witness(const CoxeterSystem& sys, const Element& w) {
  if (w.is_identity()) throw PreconditionError("witness search needs w != 1");
  if (!sys.is_purely_infinite())
    throw PreconditionError(
        "witness search needs every irreducible factor to be infinite");

  std::optional<std::size_t> s;
  std::string path;
  if (!sys.is_irreducible()) {
    // First diagram component met by the support; its factor element is the
    // subword of the letters lying in it.
    const Component& comp = sys.component_of(w.word.front());
    Word sub;
    for (Letter l : w.word)
      if (std::binary_search(comp.gens.begin(), comp.gens.end(),
                             static_cast<std::size_t>(l)))
        sub.push_back(l);
    s = detail::witness_in_factor(sys, comp.gens, sys.reduce(sub));
    path = "component-reduction";
  } else {
    if (sys.support(w).size() < sys.rank()) {
      s = support_gap_witness(sys, w);
      path = "support-fast-path";
    }
    if (!s) {
      for (std::size_t cand = 0; cand < sys.rank() && !s; ++cand)
        if (witness_conditions_hold(sys, cand, w)) s = cand;
      path = "exhaustive-search";
    }
  }
  if (!s) throw SoundnessError("witness search exhausted without a hit");

  WitnessCertificates certs;
  if (!witness_conditions_hold(sys, *s, w, &certs))
    throw SoundnessError("witness failed final verification");
  return {*s, path, certs};
}

// Does w normalize the generating set, i.e. w S w^{-1} = S?
inline bool normalizes_generators(const CoxeterSystem& sys, const Element& w) {
  // w s w^{-1} in S for every s, tested in the cap-safe conjugate form.
  Element winv = sys.inverse(w);
  for (std::size_t s = 0; s < sys.rank(); ++s)
    if (!sys.conjugate_as_generator(s, winv)) return false;
  return true;
}

}  // namespace coxbuild
