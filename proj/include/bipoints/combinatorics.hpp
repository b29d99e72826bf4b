#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipoints/errors.hpp"
#include "bipoints/geometry.hpp"

namespace bipoints {

// Boolean r x s table: cell (t,u) is set iff pi1[t] x pi2[u] lies in X.
struct IncidenceGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;  // row-major

  IncidenceGrid() = default;
  IncidenceGrid(std::size_t r, std::size_t s) : rows(r), cols(s), cells(r * s, 0) {}

  bool at(std::size_t t, std::size_t u) const { return cells[t * cols + u] != 0; }
  void set(std::size_t t, std::size_t u, bool v = true) { cells[t * cols + u] = v ? 1 : 0; }

  std::size_t count() const {
    return std::accumulate(cells.begin(), cells.end(), std::size_t{0},
                           [](std::size_t a, std::uint8_t b) { return a + b; });
  }
};

using Cell = std::pair<std::size_t, std::size_t>;

struct AcmVerdict {
  bool is_acm = true;
  std::optional<std::pair<Cell, Cell>> witness;  // present iff not ACM
};

template <class K>
IncidenceGrid incidence(const PointSet<K>& x) {
  IncidenceGrid g(x.pi1().size(), x.pi2().size());
  for (std::size_t k = 0; k < x.size(); ++k) g.set(x.row_of(k), x.col_of(k));
  return g;
}

// Geometric ACM criterion: for any two occupied cells in distinct rows and
// columns, one of the two mixed cells must be occupied.  The witness is the
// lexicographically first violating pair in row-major cell order.
inline AcmVerdict is_acm_pairwise(const IncidenceGrid& g) {
  std::vector<Cell> occupied;
  for (std::size_t t = 0; t < g.rows; ++t)
    for (std::size_t u = 0; u < g.cols; ++u)
      if (g.at(t, u)) occupied.push_back({t, u});

  for (std::size_t a = 0; a < occupied.size(); ++a)
    for (std::size_t b = a + 1; b < occupied.size(); ++b) {
      const auto [t, u] = occupied[a];
      const auto [t2, u2] = occupied[b];
      if (t == t2 || u == u2) continue;
      if (!g.at(t, u2) && !g.at(t2, u)) return {false, std::make_pair(occupied[a], occupied[b])};
    }
  return {true, std::nullopt};
}

namespace detail {

inline std::vector<std::uint64_t> row_masks(const IncidenceGrid& g) {
  if (g.cols > 64) throw LimitExceeded("chain criterion supports at most 64 columns");
  std::vector<std::uint64_t> masks(g.rows, 0);
  for (std::size_t t = 0; t < g.rows; ++t)
    for (std::size_t u = 0; u < g.cols; ++u)
      if (g.at(t, u)) masks[t] |= std::uint64_t{1} << u;
  return masks;
}

}  // namespace detail

// Independent ACM test: the rows' column sets must form a chain under
// inclusion.
inline bool is_acm_chain(const IncidenceGrid& g) {
  const auto masks = detail::row_masks(g);
  for (std::size_t t = 0; t < masks.size(); ++t)
    for (std::size_t u = t + 1; u < masks.size(); ++u) {
      const std::uint64_t join = masks[t] | masks[u];
      if (join != masks[t] && join != masks[u]) return false;
    }
  return true;
}

// Row/column permutations putting an ACM grid into Ferrers (staircase) form:
// rows by descending column set, columns by descending multiplicity, ties by
// original index.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> staircase_order(
    const IncidenceGrid& g) {
  if (!is_acm_chain(g)) throw NotAcm("grid fails the chain condition");
  const auto masks = detail::row_masks(g);

  std::vector<std::size_t> row_perm(g.rows);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::stable_sort(row_perm.begin(), row_perm.end(), [&](std::size_t a, std::size_t b) {
    // chain: distinct sets are strictly nested, so popcount decides
    return std::popcount(masks[a]) > std::popcount(masks[b]);
  });

  std::vector<std::size_t> col_mult(g.cols, 0);
  for (std::size_t t = 0; t < g.rows; ++t)
    for (std::size_t u = 0; u < g.cols; ++u)
      if (g.at(t, u)) ++col_mult[u];
  std::vector<std::size_t> col_perm(g.cols);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::stable_sort(col_perm.begin(), col_perm.end(),
                   [&](std::size_t a, std::size_t b) { return col_mult[a] > col_mult[b]; });

  return {row_perm, col_perm};
}

inline IncidenceGrid apply_permutations(const IncidenceGrid& g,
                                        const std::vector<std::size_t>& row_perm,
                                        const std::vector<std::size_t>& col_perm) {
  IncidenceGrid out(g.rows, g.cols);
  for (std::size_t t = 0; t < g.rows; ++t)
    for (std::size_t u = 0; u < g.cols; ++u) out.set(t, u, g.at(row_perm[t], col_perm[u]));
  return out;
}

// '#'/'.' rendering of the permuted grid, one string per row.
inline std::vector<std::string> render_staircase(const IncidenceGrid& g) {
  const auto [rp, cp] = staircase_order(g);
  const IncidenceGrid s = apply_permutations(g, rp, cp);
  std::vector<std::string> lines;
  for (std::size_t t = 0; t < s.rows; ++t) {
    std::string line;
    for (std::size_t u = 0; u < s.cols; ++u) line.push_back(s.at(t, u) ? '#' : '.');
    lines.push_back(std::move(line));
  }
  return lines;
}

// Verdict at PointSet level, witness mapped back to actual points.
template <class K>
std::pair<AcmVerdict, std::optional<std::pair<BiPoint<K>, BiPoint<K>>>> acm_verdict(
    const PointSet<K>& x) {
  const AcmVerdict v = is_acm_pairwise(incidence(x));
  if (v.is_acm) return {v, std::nullopt};
  const auto& [c1, c2] = *v.witness;
  BiPoint<K> p1{x.pi1()[c1.first], x.pi2()[c1.second]};
  BiPoint<K> p2{x.pi1()[c2.first], x.pi2()[c2.second]};
  return {v, std::make_pair(p1, p2)};
}

}  // namespace bipoints
