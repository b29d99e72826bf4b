#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bipoints/combinatorics.hpp"
#include "bipoints/errors.hpp"
#include "bipoints/geometry.hpp"
#include "bipoints/separators.hpp"

namespace bipoints {

// Maps grid row/column indices to P^1 coordinates.
//   generic:   [t : 1]
//   infinity:  [1 : 0] for index 0, [t-1 : 1] after
//   entangled: [t : 1] in the first factor, [u^2 : 1] in the second, so
//              second-factor values collide with first-factor ones
enum class CoordinateScheme { generic, infinity, entangled };

inline const char* scheme_name(CoordinateScheme s) {
  switch (s) {
    case CoordinateScheme::generic: return "generic";
    case CoordinateScheme::infinity: return "infinity";
    case CoordinateScheme::entangled: return "entangled";
  }
  return "generic";
}

inline CoordinateScheme scheme_from_name(const std::string& name) {
  if (name == "generic") return CoordinateScheme::generic;
  if (name == "infinity") return CoordinateScheme::infinity;
  if (name == "entangled") return CoordinateScheme::entangled;
  throw ParseError("unknown coordinate scheme '" + name + "'");
}

template <class K>
Point1<K> scheme_point(std::size_t index, CoordinateScheme s, Slot slot) {
  const auto t = static_cast<std::int64_t>(index);
  switch (s) {
    case CoordinateScheme::generic:
      return canonical(FieldTraits<K>::from_int(t), FieldTraits<K>::one());
    case CoordinateScheme::infinity:
      if (index == 0) return canonical(FieldTraits<K>::one(), K(0));
      return canonical(FieldTraits<K>::from_int(t - 1), FieldTraits<K>::one());
    case CoordinateScheme::entangled:
      return canonical(FieldTraits<K>::from_int(slot == Slot::second ? t * t : t),
                       FieldTraits<K>::one());
  }
  throw ParseError("bad scheme");
}

// Point set for the occupied cells of a grid, row-major cell order.
template <class K>
PointSet<K> grid_pointset(const IncidenceGrid& g,
                          CoordinateScheme s = CoordinateScheme::generic) {
  std::vector<BiPoint<K>> pts;
  for (std::size_t t = 0; t < g.rows; ++t)
    for (std::size_t u = 0; u < g.cols; ++u)
      if (g.at(t, u))
        pts.push_back({scheme_point<K>(t, s, Slot::first), scheme_point<K>(u, s, Slot::second)});
  return PointSet<K>(std::move(pts));
}

// n points on the diagonal: [t:1] x [t:1].  Geometry-sensitivity fixture;
// four of these already lie on a (1,1)-conic.
template <class K>
PointSet<K> diagonal_config(std::size_t n) {
  std::vector<BiPoint<K>> pts;
  for (std::size_t t = 0; t < n; ++t) {
    auto p = canonical(FieldTraits<K>::from_int(static_cast<std::int64_t>(t)), FieldTraits<K>::one());
    pts.push_back({p, p});
  }
  return PointSet<K>(std::move(pts));
}

namespace detail {

// rng() % n is deterministic across platforms, unlike
// std::uniform_int_distribution; the bias is irrelevant here.
inline std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace detail

// Uniform n_points-subset of the r x s grid.  PRNG: mt19937_64; identical
// (seed, params) give identical output.
template <class K>
PointSet<K> random_pointset(std::size_t r, std::size_t s, std::size_t n_points, std::uint64_t seed,
                            CoordinateScheme scheme = CoordinateScheme::generic) {
  if (n_points > r * s) throw TooManyPoints();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> cells(r * s);
  std::iota(cells.begin(), cells.end(), 0);
  for (std::size_t k = 0; k < n_points; ++k)
    std::swap(cells[k], cells[k + detail::bounded(rng, cells.size() - k)]);
  cells.resize(n_points);
  std::sort(cells.begin(), cells.end());

  IncidenceGrid g(r, s);
  for (std::size_t c : cells) g.set(c / s, c % s);
  return grid_pointset<K>(g, scheme);
}

// Random staircase: non-increasing row counts, left-justified.  ACM by
// construction (row column-sets are nested initial segments).
template <class K>
PointSet<K> random_acm_pointset(std::size_t r, std::size_t s, std::uint64_t seed,
                                CoordinateScheme scheme = CoordinateScheme::generic) {
  std::mt19937_64 rng(seed);
  IncidenceGrid g(r, s);
  std::size_t prev = s;
  for (std::size_t t = 0; t < r && prev > 0; ++t) {
    const std::size_t lo = (t == 0) ? 1 : 0;
    const std::size_t c = lo + detail::bounded(rng, prev - lo + 1);
    for (std::size_t u = 0; u < c; ++u) g.set(t, u);
    prev = c;
  }
  return grid_pointset<K>(g, scheme);
}

struct PointRecord {
  std::size_t index = 0;
  DegreeSet degrees;
  bool singleton = false;
};

// Both sides of the main equivalence, computed independently: combinatorial
// ACM-ness versus every degree set being a singleton.
struct TheoremReport {
  std::string config_id;
  bool acm_combinatorial = false;
  std::vector<PointRecord> details;
  bool all_singletons = false;
  bool consistent = false;
  std::optional<std::pair<Cell, Cell>> witness;
};

template <class K>
TheoremReport verify_main_theorem(const PointSet<K>& x, std::string config_id = "") {
  TheoremReport rep;
  rep.config_id = std::move(config_id);
  const AcmVerdict v = is_acm_pairwise(incidence(x));
  rep.acm_combinatorial = v.is_acm;
  rep.witness = v.witness;

  const int bi = static_cast<int>(x.pi1().size()) - 1;
  const int bj = static_cast<int>(x.pi2().size()) - 1;
  const HilbertTable hf_x = hilbert_table(x, bi, bj);

  rep.all_singletons = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    PointRecord rec;
    rec.index = k;
    rec.degrees = degree_set_on_box(x, hf_x, x.point(k), bi, bj);
    rec.singleton = rec.degrees.size() == 1;
    if (!rec.singleton) rep.all_singletons = false;
    rep.details.push_back(std::move(rec));
  }
  rep.consistent = rep.acm_combinatorial == rep.all_singletons;
  return rep;
}

struct FormulaReport {
  bool ok = true;
  std::size_t failed_point = 0;
  DegreeSet expected, actual;
};

// deg_X(p) = {(a-1, b-1)} for every point of an ACM set; the left side comes
// from the rank scan, the right side is purely combinatorial.
template <class K>
FormulaReport verify_acm_formula(const PointSet<K>& x) {
  if (!is_acm_pairwise(incidence(x)).is_acm) throw NotAcm("verify_acm_formula needs an ACM set");
  const int bi = static_cast<int>(x.pi1().size()) - 1;
  const int bj = static_cast<int>(x.pi2().size()) - 1;
  const HilbertTable hf_x = hilbert_table(x, bi, bj);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const DegreeSet actual = degree_set_on_box(x, hf_x, x.point(k), bi, bj);
    const DegreeSet expected = {acm_degree_formula(x, x.point(k))};
    if (actual != expected) return {false, k, expected, actual};
  }
  return {};
}

struct CensusSummary {
  std::size_t rows = 0, cols = 0;
  std::string scheme;
  std::string field;
  std::uint64_t total = 0;
  std::uint64_t acm = 0;
  std::uint64_t acm_chain = 0;  // independent count via the chain criterion
  std::uint64_t mismatches = 0;
  double elapsed_ms = 0.0;
  // per config (mask-1): bit0 = combinatorial ACM, bit1 = all degree sets
  // singletons (the linear-algebra side)
  std::vector<std::uint8_t> verdicts;
};

// Exhaustive sweep over all nonempty cell subsets of the r x s grid; every
// configuration is pushed through verify_main_theorem.
template <class K>
CensusSummary census(std::size_t r, std::size_t s,
                     CoordinateScheme scheme = CoordinateScheme::generic,
                     std::size_t cell_limit = 16) {
  if (r * s > cell_limit)
    throw LimitExceeded("census grid has " + std::to_string(r * s) + " cells, limit " +
                        std::to_string(cell_limit));
  const auto start = std::chrono::steady_clock::now();

  CensusSummary sum;
  sum.rows = r;
  sum.cols = s;
  sum.scheme = scheme_name(scheme);
  sum.field = FieldTraits<K>::name();
  const std::uint64_t n_masks = (std::uint64_t{1} << (r * s)) - 1;
  sum.total = n_masks;
  sum.verdicts.reserve(n_masks);

  for (std::uint64_t mask = 1; mask <= n_masks; ++mask) {
    IncidenceGrid g(r, s);
    for (std::size_t c = 0; c < r * s; ++c)
      if (mask & (std::uint64_t{1} << c)) g.set(c / s, c % s);
    const PointSet<K> x = grid_pointset<K>(g, scheme);
    const TheoremReport rep = verify_main_theorem(x, std::to_string(mask));
    if (rep.acm_combinatorial) ++sum.acm;
    if (is_acm_chain(incidence(x))) ++sum.acm_chain;
    if (!rep.consistent) ++sum.mismatches;
    sum.verdicts.push_back(static_cast<std::uint8_t>((rep.acm_combinatorial ? 1 : 0) |
                                                     (rep.all_singletons ? 2 : 0)));
  }

  sum.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

}  // namespace bipoints
