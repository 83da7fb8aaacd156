#pragma once

// Numerical chart of the canonical reflection representation and the dual
// cone it sweeps out: chamber points, wall sides, cells with sample points,
// and a probe for antipodal point pairs. The word-exact predicates are the
// authoritative ones; the floating-point chart exists to cross-check them
// and to export geometry for plotting.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <ostream>
#include <random>
#include <vector>

#include "coxbuild/coxeter.hpp"

namespace coxbuild {

namespace detail {

// Dense square matrix, row major; all sizes here are the system rank.
struct Mat {
  std::size_t n = 0;
  std::vector<double> a;

  static Mat identity(std::size_t n) {
    Mat m{n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1.0;
    return m;
  }
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  Mat operator*(const Mat& o) const {
    Mat r{n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        double v = at(i, k);
        if (v == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) r.a[i * n + j] += v * o.a[k * n + j];
      }
    return r;
  }
  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
    return y;
  }
};

}  // namespace detail

// The canonical bilinear form B(e_s, e_t) = -cos(pi / m(s,t)), with -1 for
// infinite bonds, and the generator action s(e_t) = e_t - 2 B(e_s,e_t) e_s.
// Points of the dual space are stored by their pairings x_s = <x, e_s>;
// the group acts on them by <w.x, v> = <x, w^{-1}.v>.
class ConeChart {
 public:
  explicit ConeChart(const CoxeterSystem& sys) : sys_(sys) {
    const std::size_t n = sys_.rank();
    b_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b_[i * n + j] = i == j ? 1.0 : bond_cosine(sys_.matrix().m(i, j));
    for (std::size_t s = 0; s < n; ++s) {
      detail::Mat m = detail::Mat::identity(n);
      for (std::size_t t = 0; t < n; ++t) m.at(s, t) -= 2.0 * b_[s * n + t];
      gens_.push_back(std::move(m));
    }
  }

  const CoxeterSystem& system() const { return sys_; }
  std::size_t dim() const { return sys_.rank(); }
  double bilinear(std::size_t i, std::size_t j) const { return b_[i * dim() + j]; }
  const detail::Mat& generator_matrix(std::size_t s) const { return gens_.at(s); }

  double form(const std::vector<double>& u, const std::vector<double>& v) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) acc += u[i] * b_[i * dim() + j] * v[j];
    return acc;
  }

  // Matrix of w acting on V, the word applied left to right.
  detail::Mat matrix_of(const Element& w) const {
    detail::Mat m = detail::Mat::identity(dim());
    for (Letter l : w.word) m = m * gens_[l];
    return m;
  }

  // Dual action on pairing coordinates: (w.x)_s = <x, w^{-1} e_s>.
  std::vector<double> dual_apply(const Element& w, const std::vector<double>& x) const {
    detail::Mat minv = detail::Mat::identity(dim());
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
      minv = minv * gens_[*it];
    std::vector<double> y(dim(), 0.0);
    for (std::size_t s = 0; s < dim(); ++s)
      for (std::size_t i = 0; i < dim(); ++i) y[s] += x[i] * minv.at(i, s);
    return y;
  }

  // Interior reference point of the fundamental chamber: all pairings 1.
  std::vector<double> reference_point() const { return std::vector<double>(dim(), 1.0); }

  std::vector<double> chamber_point(const Element& w) const {
    return dual_apply(w, reference_point());
  }

 private:
  CoxeterSystem sys_;
  std::vector<double> b_;
  std::vector<detail::Mat> gens_;
};

enum class WallSide { positive, negative };

// Word-exact: the chamber moved by w lies on the positive side of the wall
// of s exactly when l(sw) > l(w).
inline WallSide side_of_wall(const CoxeterSystem& sys, const Element& w, std::size_t s) {
  return sys.mul(s, w).length() > w.length() ? WallSide::positive : WallSide::negative;
}

// Chart variant: sign of the pairing of the chamber point against e_s.
// A pairing inside the tolerance band would mean the point sits on the
// wall, which cannot happen for chamber interior points; it is reported
// rather than guessed.
inline WallSide side_of_wall_numeric(const ConeChart& chart, const Element& w,
                                     std::size_t s, double tol = 1e-9) {
  double v = chart.chamber_point(w).at(s);
  if (std::abs(v) < tol)
    throw SoundnessError("degenerate wall pairing for a chamber interior point");
  return v > 0 ? WallSide::positive : WallSide::negative;
}

// Word-exact: the wall of s bounds the chamber moved by w exactly when
// w^{-1} s w is again a generator.
inline bool is_wall_of_chamber(const CoxeterSystem& sys, std::size_t s, const Element& w) {
  return sys.conjugate_as_generator(s, w).has_value();
}

// Chart variant: the wall of s bounds w.C0 iff some basis root is carried
// onto +-e_s by w.
inline bool is_wall_of_chamber_numeric(const ConeChart& chart, std::size_t s,
                                       const Element& w, double tol = 1e-9) {
  detail::Mat m = chart.matrix_of(w);
  const std::size_t n = chart.dim();
  for (std::size_t u = 0; u < n; ++u) {
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < n; ++i) {
      double target = i == s ? 1.0 : 0.0;
      if (std::abs(m.at(i, u) - target) > tol) plus = false;
      if (std::abs(m.at(i, u) + target) > tol) minus = false;
    }
    if (plus || minus) return true;
  }
  return false;
}

// First generator whose wall does not bound the chamber moved by w and
// does not separate it from the fundamental chamber. Exists for every
// w != 1 in an irreducible infinite system; the geometric counterpart of
// the witness conditions.
inline std::size_t geometric_witness(const CoxeterSystem& sys, const Element& w) {
  if (w.is_identity()) throw PreconditionError("geometric witness needs w != 1");
  if (!sys.is_irreducible() || sys.components()[0].finite)
    throw PreconditionError("geometric witness needs an irreducible infinite system");
  for (std::size_t s = 0; s < sys.rank(); ++s)
    if (!is_wall_of_chamber(sys, s, w) &&
        side_of_wall(sys, w, s) == WallSide::positive)
      return s;
  throw SoundnessError("no geometric witness in an irreducible infinite system");
}

// ----- cells -----

// Cell w.A_J, identified by the minimal coset representative and the
// generator subset J cut out by the walls through it.
struct Face {
  Element rep;
  std::vector<std::size_t> J;
  friend auto operator<=>(const Face&, const Face&) = default;
};

struct CellRecord {
  Face face;
  std::vector<double> sample_point;    // pairing coordinates
  std::vector<Element> support_walls;  // reflections rep s rep^{-1}, s in J
};

// All cells w.A_J with a representative of length <= max_len, deduplicated
// by representative, ordered by (|J|, rep length, rep word, J).
inline std::vector<CellRecord> enumerate_cells(const CoxeterSystem& sys,
                                               const ConeChart& chart,
                                               std::size_t max_len) {
  const std::size_t n = sys.rank();
  std::map<Face, CellRecord> cells;
  for (const Element& w : sys.ball(max_len)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> J;
      for (std::size_t s = 0; s < n; ++s)
        if (mask & (std::uint64_t{1} << s)) J.push_back(s);
      Face face{sys.min_coset_rep(w, J), J};
      if (cells.contains(face)) continue;
      std::vector<double> base(n, 1.0);
      for (std::size_t s : J) base[s] = 0.0;
      CellRecord rec;
      rec.sample_point = chart.dual_apply(face.rep, base);
      for (std::size_t s : J) rec.support_walls.push_back(sys.reflection(face.rep, s));
      rec.face = face;
      cells.emplace(std::move(face), std::move(rec));
    }
  }
  std::vector<CellRecord> out;
  for (auto& [face, rec] : cells) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), [](const CellRecord& x, const CellRecord& y) {
    return std::make_tuple(x.face.J.size(), x.face.rep.length(), x.face.rep.word,
                           x.face.J) < std::make_tuple(y.face.J.size(),
                                                       y.face.rep.length(),
                                                       y.face.rep.word, y.face.J);
  });
  return out;
}

// ----- antipodal probe -----

struct ProbeViolation {
  Face cell;
  std::vector<double> point;
  Element chamber;  // -point lay in this chamber's closure
};

struct AntipodeProbeReport {
  std::size_t max_len = 0;
  std::size_t samples_per_cell = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t cells_sampled = 0;
  std::size_t samples = 0;
  std::vector<ProbeViolation> violations;
  bool clean() const { return violations.empty(); }
};

// Samples nonzero points from the cells of the enumerated region and tests
// whether their negatives land in any enumerated closed chamber. For a
// region of the cone over an infinite system the answer must be never; for
// a finite system the negative lies in some chamber every time.
inline AntipodeProbeReport antipode_probe(const CoxeterSystem& sys, std::size_t max_len,
                                          std::size_t samples_per_cell,
                                          std::uint64_t seed, double tol = 1e-9) {
  ConeChart chart(sys);
  const std::size_t n = sys.rank();
  AntipodeProbeReport rep;
  rep.max_len = max_len;
  rep.samples_per_cell = samples_per_cell;
  rep.seed = seed;
  rep.tol = tol;

  // Closed chambers w.C0: x in w.C0 iff <x, w e_s> >= 0 for all s.
  std::vector<Element> chambers = sys.ball(max_len);
  std::vector<detail::Mat> mats;
  mats.reserve(chambers.size());
  for (const Element& w : chambers) mats.push_back(chart.matrix_of(w));

  auto pairing = [&](const std::vector<double>& x, const detail::Mat& m,
                     std::size_t s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * m.at(i, s);
    return acc;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.1, 1.0);
  for (const CellRecord& cell : enumerate_cells(sys, chart, max_len)) {
    if (cell.face.J.size() == n) continue;  // the origin, excluded
    ++rep.cells_sampled;
    for (std::size_t k = 0; k < samples_per_cell; ++k) {
      std::vector<double> base(n, 0.0);
      for (std::size_t s = 0; s < n; ++s)
        if (!std::binary_search(cell.face.J.begin(), cell.face.J.end(), s))
          base[s] = coord(rng);
      std::vector<double> x = chart.dual_apply(cell.face.rep, base);
      std::vector<double> neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -x[i];
      ++rep.samples;
      for (std::size_t c = 0; c < chambers.size(); ++c) {
        bool inside = true;
        for (std::size_t s = 0; s < n && inside; ++s)
          if (pairing(neg, mats[c], s) < -tol) inside = false;
        if (inside) {
          rep.violations.push_back({cell.face, x, chambers[c]});
          break;
        }
      }
    }
  }
  return rep;
}

// ----- CSV export -----

// One row per cell: representative word, J, sample point coordinates, and
// the sign of each pairing <point, e_s>.
inline void export_cells_csv(std::ostream& os, const CoxeterSystem& sys,
                             std::size_t max_len, double tol = 1e-9) {
  ConeChart chart(sys);
  os << "cell_id,rep,J";
  for (std::size_t s = 0; s < sys.rank(); ++s) os << ",x_" << sys.matrix().label(s);
  for (std::size_t s = 0; s < sys.rank(); ++s) os << ",side_" << sys.matrix().label(s);
  os << "\n";
  std::size_t id = 0;
  for (const CellRecord& cell : enumerate_cells(sys, chart, max_len)) {
    os << id++ << ",\"" << sys.format(cell.face.rep) << "\",\"";
    for (std::size_t i = 0; i < cell.face.J.size(); ++i) {
      if (i) os << ' ';
      os << sys.matrix().label(cell.face.J[i]);
    }
    os << '"';
    for (double v : cell.sample_point) os << ',' << v;
    for (double v : cell.sample_point)
      os << ',' << (std::abs(v) < tol ? '0' : (v > 0 ? '+' : '-'));
    os << "\n";
  }
}

}  // namespace coxbuild
