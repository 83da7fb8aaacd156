#pragma once

// Exact word arithmetic in Coxeter systems.
//
// Elements are stored as ShortLex-least reduced words under the declared
// generator order, so element equality is letterwise word comparison.
// Reduction follows Tits's solution to the word problem: breadth-first
// closure under braid moves, deleting adjacent equal pairs as soon as one
// appears anywhere in the closure. Exponential in the worst case, which is
// acceptable at the word lengths this library handles (capped, default 64).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coxbuild {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: files, word strings, incidence tables.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structural defects of a Coxeter matrix (asymmetry, bad diagonal, ...).
class MatrixError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Desk-scale resource caps (word length, enumeration size).
class LimitError : public Error {
 public:
  using Error::Error;
};

// A certificate that is guaranteed by construction failed to verify.
// Seeing this means a bug in the engine, not bad input.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Entry of a Coxeter matrix: a finite order or infinity. Infinity is its
// own state, never a sentinel integer.
class MOrder {
 public:
  static MOrder finite(unsigned m) { return MOrder(m); }
  static MOrder inf() { return MOrder(); }

  bool is_inf() const { return !m_.has_value(); }
  unsigned order() const {
    if (!m_) throw PreconditionError("MOrder::order() called on infinity");
    return *m_;
  }
  friend bool operator==(const MOrder&, const MOrder&) = default;

 private:
  MOrder() = default;
  explicit MOrder(unsigned m) : m_(m) {}
  std::optional<unsigned> m_;
};

// Symmetric matrix of orders m(s,t) with 1 on the diagonal and entries
// >= 2 (or infinity) off it. Generators keep the declared order; that
// order fixes ShortLex and every deterministic tie-break downstream.
class CoxeterMatrix {
 public:
  CoxeterMatrix(std::vector<std::string> labels,
                std::vector<std::vector<MOrder>> entries)
      : labels_(std::move(labels)), entries_(std::move(entries)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw MatrixError("a Coxeter matrix needs at least one generator");
    if (n > 64) throw MatrixError("rank capped at 64");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j])
          throw MatrixError("duplicate generator label '" + labels_[i] + "'");
    if (entries_.size() != n)
      throw MatrixError("expected " + std::to_string(n) + " rows, got " +
                        std::to_string(entries_.size()));
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_[i].size() != n)
        throw MatrixError("row " + std::to_string(i + 1) + " has " +
                          std::to_string(entries_[i].size()) + " entries, expected " +
                          std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) {
        const MOrder& m = entries_[i][j];
        if (i == j) {
          if (m.is_inf() || m.order() != 1)
            throw MatrixError("diagonal entry at row " + std::to_string(i + 1) +
                              ", column " + std::to_string(j + 1) + " must be 1");
        } else if (!m.is_inf() && m.order() < 2) {
          throw MatrixError("off-diagonal entry at row " + std::to_string(i + 1) +
                            ", column " + std::to_string(j + 1) + " must be >= 2 or inf");
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(entries_[i][j] == entries_[j][i]))
          throw MatrixError("asymmetric entries at row " + std::to_string(i + 1) +
                            ", column " + std::to_string(j + 1));
  }

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }
  MOrder m(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  // Diagram edge: any bond of order >= 3, including infinity.
  bool edge(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    const MOrder& mo = entries_[i][j];
    return mo.is_inf() || mo.order() >= 3;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<MOrder>> entries_;
};

// Group element as its canonical (ShortLex-least reduced) word.
// Only CoxeterSystem::reduce and friends produce these.
struct Element {
  Word word;

  bool is_identity() const { return word.empty(); }
  std::size_t length() const { return word.size(); }
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Connected component of the diagram together with its finiteness class.
struct Component {
  std::vector<std::size_t> gens;  // ascending generator indices
  bool finite = false;
  std::string type;  // "A3", "I2(7)", ... when finite; empty otherwise
};

namespace detail {

// Pattern-match one connected diagram component against the classification
// of finite Coxeter groups. Returns the type tag, or nullopt if infinite.
inline std::optional<std::string> classify_finite(const CoxeterMatrix& mx,
                                                  const std::vector<std::size_t>& gens) {
  const std::size_t n = gens.size();
  if (n == 1) return "A1";

  struct Edge {
    std::size_t a, b;
    unsigned m;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MOrder mo = mx.m(gens[i], gens[j]);
      if (mo.is_inf()) return std::nullopt;
      if (mo.order() >= 3) edges.push_back({i, j, mo.order()});
    }

  if (n == 2) {
    // A connected pair always carries a bond.
    unsigned m = edges.front().m;
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    if (m == 6) return "G2";
    return "I2(" + std::to_string(m) + ")";
  }

  // Rank >= 3: the diagram must be a tree with labels in {3,4,5} and at
  // most one marked bond; anything else on the finite list fails.
  if (edges.size() != n - 1) return std::nullopt;
  unsigned n4 = 0, n5 = 0;
  for (const Edge& e : edges) {
    if (e.m >= 6) return std::nullopt;
    if (e.m == 4) ++n4;
    if (e.m == 5) ++n5;
  }
  if (n4 + n5 > 1) return std::nullopt;

  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::size_t branch = n;  // the unique degree-3 vertex, if any
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() >= 4) return std::nullopt;
    if (adj[v].size() == 3) {
      if (branch != n) return std::nullopt;
      branch = v;
    }
  }

  if (n4 + n5 == 1) {
    if (branch != n) return std::nullopt;  // marked bond on a fork
    const Edge& marked = *std::find_if(edges.begin(), edges.end(),
                                       [](const Edge& e) { return e.m >= 4; });
    bool at_end = adj[marked.a].size() == 1 || adj[marked.b].size() == 1;
    if (n5 == 1) {
      if (!at_end) return std::nullopt;
      if (n == 3) return "H3";
      if (n == 4) return "H4";
      return std::nullopt;
    }
    if (at_end) return "B" + std::to_string(n);
    if (n == 4) return "F4";  // the 4-bond sits in the middle of the path
    return std::nullopt;
  }

  // Simply laced tree.
  if (branch == n) return "A" + std::to_string(n);
  std::vector<std::size_t> arms;
  for (std::size_t next : adj[branch]) {
    std::size_t len = 0, prev = branch, cur = next;
    for (;;) {
      ++len;
      std::size_t cont = n;
      for (std::size_t w : adj[cur])
        if (w != prev) cont = w;
      if (cont == n) break;
      prev = cur;
      cur = cont;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
  return std::nullopt;
}

}  // namespace detail

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix, std::size_t max_word_len = 64)
      : matrix_(std::move(matrix)),
        max_word_len_(max_word_len),
        memo_(std::make_shared<Memo>()) {
    // Diagram components, ordered by smallest generator index.
    const std::size_t n = matrix_.rank();
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> comp{start};
      seen[start] = true;
      for (std::size_t head = 0; head < comp.size(); ++head)
        for (std::size_t j = 0; j < n; ++j)
          if (!seen[j] && matrix_.edge(comp[head], j)) {
            seen[j] = true;
            comp.push_back(j);
          }
      std::sort(comp.begin(), comp.end());
      Component c;
      c.gens = std::move(comp);
      if (auto type = detail::classify_finite(matrix_, c.gens)) {
        c.finite = true;
        c.type = *type;
      }
      components_.push_back(std::move(c));
    }
  }

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  std::size_t max_word_length() const { return max_word_len_; }
  const std::vector<Component>& components() const { return components_; }

  bool is_irreducible() const { return components_.size() == 1; }
  bool is_finite() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Component& c) { return c.finite; });
  }
  bool is_purely_infinite() const {
    return std::none_of(components_.begin(), components_.end(),
                        [](const Component& c) { return c.finite; });
  }

  const Component& component_of(std::size_t gen) const {
    for (const Component& c : components_)
      if (std::binary_search(c.gens.begin(), c.gens.end(), gen)) return c;
    throw PreconditionError("generator index out of range");
  }

  // ----- words -----

  Word parse_word(const std::string& text) const {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      auto idx = matrix_.index_of(tok);
      if (!idx) throw ParseError("unknown generator '" + tok + "' in word");
      w.push_back(static_cast<Letter>(*idx));
    }
    return w;
  }

  std::string format_word(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += matrix_.label(w[i]);
    }
    return out;
  }

  std::string format(const Element& e) const { return format_word(e.word); }

  // ----- reduction and arithmetic -----

  Element reduce(const Word& w) const {
    check_word(w);
    return Element{canonical(w)};
  }

  Element element(const std::string& text) const { return reduce(parse_word(text)); }

  Element generator(std::size_t s) const {
    check_gen(s);
    return Element{Word{static_cast<Letter>(s)}};
  }

  bool equal(const Word& a, const Word& b) const {
    check_word(a);
    check_word(b);
    return canonical(a) == canonical(b);
  }

  std::size_t length(const Word& w) const {
    check_word(w);
    return canonical(w).size();
  }

  Element mul(const Element& a, const Element& b) const {
    Word w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return reduce(w);
  }

  Element mul(const Element& a, std::size_t s) const {
    check_gen(s);
    Word w = a.word;
    w.push_back(static_cast<Letter>(s));
    return reduce(w);
  }

  Element mul(std::size_t s, const Element& a) const {
    check_gen(s);
    Word w{static_cast<Letter>(s)};
    w.insert(w.end(), a.word.begin(), a.word.end());
    return reduce(w);
  }

  Element inverse(const Element& a) const {
    Word w(a.word.rbegin(), a.word.rend());
    return reduce(w);
  }

  // w^{-1} s w
  Element conjugate_generator(std::size_t s, const Element& w) const {
    return mul(inverse(w), mul(s, w));
  }

  // The generator t with s w = w t, when w^{-1} s w lies in S. Decided by
  // comparing words of length at most l(w) + 1, so it works even when the
  // full conjugate would exceed the length cap.
  std::optional<std::size_t> conjugate_as_generator(std::size_t s,
                                                    const Element& w) const {
    Element sw = mul(s, w);
    for (std::size_t t = 0; t < rank(); ++t)
      if (sw == mul(w, t)) return t;
    return std::nullopt;
  }

  // w s w^{-1}: the reflection fixing the wall obtained by moving H_s by w.
  Element reflection(const Element& w, std::size_t s) const {
    return mul(mul(w, s), inverse(w));
  }

  bool left_descent(std::size_t s, const Element& w) const {
    return mul(s, w).length() < w.length();
  }

  bool right_descent(const Element& w, std::size_t s) const {
    return mul(w, s).length() < w.length();
  }

  std::vector<std::size_t> support(const Element& w) const {
    std::vector<bool> hit(rank(), false);
    for (Letter l : w.word) hit[l] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank(); ++i)
      if (hit[i]) out.push_back(i);
    return out;
  }

  // All reduced expressions of an element (braid closure of its canonical
  // word), in lexicographic order.
  std::vector<Word> reduced_expressions(const Element& e) const {
    check_word(e.word);
    Word canon = canonical(e.word);
    Word shortened;
    std::set<Word> closure;
    if (square_or_closure(canon, shortened, &closure))
      throw SoundnessError("canonical word of an element was not reduced");
    return {closure.begin(), closure.end()};
  }

  // Greedy ascent in the weak order; terminates at the longest element of
  // a finite system.
  Element longest_element() const {
    if (!is_finite())
      throw PreconditionError("longest element requires a finite system");
    Element w;
    for (;;) {
      bool ascended = false;
      for (std::size_t s = 0; s < rank(); ++s) {
        Element ws = mul(w, s);
        if (ws.length() > w.length()) {
          w = std::move(ws);
          ascended = true;
          break;
        }
      }
      if (!ascended) return w;
    }
  }

  // Minimal-length representative of the coset w W_J, obtained by stripping
  // right descents lying in J.
  Element min_coset_rep(const Element& w, const std::vector<std::size_t>& J) const {
    for (std::size_t s : J) check_gen(s);
    Element cur = w;
    for (;;) {
      bool stripped = false;
      for (std::size_t s : J)
        if (right_descent(cur, s)) {
          cur = mul(cur, s);
          stripped = true;
          break;
        }
      if (!stripped) return cur;
    }
  }

  // Every element of length <= max_len, ordered by (length, word).
  std::vector<Element> ball(std::size_t max_len) const {
    std::vector<Element> all{Element{}};
    std::set<Element> seen{Element{}};
    std::vector<Element> frontier{Element{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Element> next;
      for (const Element& w : frontier)
        for (std::size_t s = 0; s < rank(); ++s) {
          Element ws = mul(w, s);
          if (ws.length() == len && seen.insert(ws).second) next.push_back(ws);
        }
      std::sort(next.begin(), next.end());
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    return all;
  }

 private:
  struct Memo {
    std::mutex mu;
    std::unordered_map<std::string, Word> canon;
  };

  void check_gen(std::size_t s) const {
    if (s >= rank()) throw PreconditionError("generator index out of range");
  }

  void check_word(const Word& w) const {
    for (Letter l : w)
      if (l >= rank()) throw PreconditionError("word contains an out-of-range letter");
  }

  Word canonical(const Word& w) const {
    std::string key(w.begin(), w.end());
    {
      std::lock_guard<std::mutex> lock(memo_->mu);
      auto it = memo_->canon.find(key);
      if (it != memo_->canon.end()) return it->second;
    }
    Word result = reduce_uncached(w);
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->canon.emplace(std::move(key), result);
    return result;
  }

  Word reduce_uncached(Word w) const {
    if (w.size() > max_word_len_)
      throw LimitError("word of length " + std::to_string(w.size()) +
                       " exceeds the cap of " + std::to_string(max_word_len_));
    for (;;) {
      Word shortened;
      std::set<Word> closure;
      if (square_or_closure(w, shortened, &closure)) {
        w = std::move(shortened);
        continue;
      }
      // Same length throughout the closure, so the set minimum is ShortLex.
      return closure.empty() ? Word{} : *closure.begin();
    }
  }

  // Breadth-first braid closure of `start`. If any word in the closure has
  // an adjacent equal pair, writes that word with the pair deleted into
  // `shortened` and returns true. Otherwise fills `closure` and returns
  // false; `closure` is then the full set of braid-equivalent words.
  bool square_or_closure(const Word& start, Word& shortened,
                         std::set<Word>* closure) const {
    std::set<Word> seen{start};
    std::vector<Word> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Word u = queue[head];
      for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if (u[i] == u[i + 1]) {
          shortened = u;
          shortened.erase(shortened.begin() + i, shortened.begin() + i + 2);
          return true;
        }
      for_each_braid_move(u, [&](Word v) {
        if (seen.insert(v).second) queue.push_back(std::move(v));
      });
    }
    if (closure) *closure = std::move(seen);
    return false;
  }

  template <typename F>
  void for_each_braid_move(const Word& u, F&& emit) const {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Letter a = u[i];
      for (std::size_t b = 0; b < rank(); ++b) {
        if (b == a) continue;
        MOrder mo = matrix_.m(a, b);
        if (mo.is_inf()) continue;
        const std::size_t m = mo.order();
        if (i + m > u.size()) continue;
        bool alternating = true;
        for (std::size_t k = 0; k < m; ++k)
          if (u[i + k] != (k % 2 == 0 ? a : static_cast<Letter>(b))) {
            alternating = false;
            break;
          }
        if (!alternating) continue;
        Word v = u;
        for (std::size_t k = 0; k < m; ++k)
          v[i + k] = (k % 2 == 0 ? static_cast<Letter>(b) : a);
        emit(std::move(v));
      }
    }
  }

  CoxeterMatrix matrix_;
  std::size_t max_word_len_;
  std::vector<Component> components_;
  std::shared_ptr<Memo> memo_;  // shared across copies; reduce stays pure
};

// ----- input format -----
//
// Line 1: whitespace-separated generator labels. Then an n x n table, one
// row per line, entries either integers >= 1 or the token "inf". Blank
// lines and lines starting with '#' are skipped.

inline CoxeterSystem parse_system(std::istream& in) {
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw ParseError("empty system file");
  std::vector<std::string> labels;
  {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
  }
  const std::size_t n = labels.size();

  std::vector<std::vector<MOrder>> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line(line))
      throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                       std::to_string(i));
    std::istringstream ls(line);
    std::vector<MOrder> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "inf") {
        row.push_back(MOrder::inf());
        continue;
      }
      unsigned long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v == 0)
        throw ParseError("bad entry '" + tok + "' at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(row.size() + 1));
      row.push_back(MOrder::finite(static_cast<unsigned>(v)));
    }
    if (row.size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(n));
    entries.push_back(std::move(row));
  }
  return CoxeterSystem(CoxeterMatrix(std::move(labels), std::move(entries)));
}

inline CoxeterSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

inline CoxeterSystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system file '" + path + "'");
  return parse_system(in);
}

// ----- stock systems -----

inline CoxeterSystem make_dihedral(MOrder m) {
  return CoxeterSystem(CoxeterMatrix({"s", "t"}, {{MOrder::finite(1), m},
                                                  {m, MOrder::finite(1)}}));
}

// Type A_n with labels s1..sn; consecutive bonds of order 3.
inline CoxeterSystem make_type_a(unsigned n) {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<std::vector<MOrder>> e(n, std::vector<MOrder>(n, MOrder::finite(2)));
  for (unsigned i = 0; i < n; ++i) e[i][i] = MOrder::finite(1);
  for (unsigned i = 0; i + 1 < n; ++i) e[i][i + 1] = e[i + 1][i] = MOrder::finite(3);
  return CoxeterSystem(CoxeterMatrix(std::move(labels), std::move(e)));
}

// Affine A2: a triangle of bonds of order 3 (infinite, irreducible).
inline CoxeterSystem make_affine_a2() {
  MOrder one = MOrder::finite(1), three = MOrder::finite(3);
  return CoxeterSystem(CoxeterMatrix({"a", "b", "c"}, {{one, three, three},
                                                       {three, one, three},
                                                       {three, three, one}}));
}

// ----- numerical diagnostics for the classification -----
//
// The cosine matrix of a component is positive definite exactly when the
// component is finite. These helpers exist to cross-check the
// pattern-matching classifier; the classifier itself never consults them.

inline double bond_cosine(const MOrder& m) {
  if (m.is_inf()) return -1.0;
  return -std::cos(3.14159265358979323846 / m.order());
}

inline double cosine_gram_determinant(const CoxeterSystem& sys, const Component& comp) {
  const std::size_t n = comp.gens.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = i == j ? 1.0 : bond_cosine(sys.matrix().m(comp.gens[i], comp.gens[j]));
  // Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      det = -det;
    }
    double p = a[col * n + col];
    if (std::abs(p) < 1e-14) return 0.0;
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / p;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

inline bool cosine_matrix_positive_definite(const CoxeterSystem& sys, const Component& comp,
                                            double tol = 1e-9) {
  // Cholesky: succeeds with positive pivots iff positive definite.
  const std::size_t n = comp.gens.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = i == j ? 1.0 : bond_cosine(sys.matrix().m(comp.gens[i], comp.gens[j]));
  for (std::size_t k = 0; k < n; ++k) {
    double d = a[k * n + k];
    for (std::size_t j = 0; j < k; ++j) d -= a[k * n + j] * a[k * n + j];
    if (d <= tol) return false;
    double root = std::sqrt(d);
    a[k * n + k] = root;
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = a[i * n + k];
      for (std::size_t j = 0; j < k; ++j) v -= a[i * n + j] * a[k * n + j];
      a[i * n + k] = v / root;
    }
  }
  return true;
}

}  // namespace coxbuild
