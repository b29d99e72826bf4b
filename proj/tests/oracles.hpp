// Test-only oracles, independent of the elimination code they check.
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bipoints/geometry.hpp"
#include "bipoints/matrix.hpp"

namespace bipoints::oracles {

// Determinant by cofactor expansion along the first row.
template <class K>
K determinant(const std::vector<std::vector<K>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return FieldTraits<K>::one();
  if (n == 1) return a[0][0];
  K det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (FieldTraits<K>::is_zero(a[0][c])) continue;
    std::vector<std::vector<K>> sub(n - 1, std::vector<K>(n - 1, K(0)));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        if (c2 == c) continue;
        sub[r - 1][cc++] = a[r][c2];
      }
    }
    const K term = a[0][c] * determinant(sub);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Rank as the largest k with a nonvanishing k x k minor, by exhaustive
// enumeration of row/column subsets.  Exponential; keep matrices small.
template <class K>
std::size_t minor_rank(const Matrix<K>& m) {
  const std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t k = n; k >= 1; --k) {
    std::vector<std::size_t> rows_sel(k), cols_sel(k);
    // enumerate k-subsets of rows and cols via bitmasks
    for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << m.rows); ++rm) {
      if (static_cast<std::size_t>(std::popcount(rm)) != k) continue;
      for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << m.cols); ++cm) {
        if (static_cast<std::size_t>(std::popcount(cm)) != k) continue;
        std::vector<std::vector<K>> sub;
        for (std::size_t r = 0; r < m.rows; ++r) {
          if (!(rm & (std::uint64_t{1} << r))) continue;
          std::vector<K> row;
          for (std::size_t c = 0; c < m.cols; ++c)
            if (cm & (std::uint64_t{1} << c)) row.push_back(m.at(r, c));
          sub.push_back(std::move(row));
        }
        if (!FieldTraits<K>::is_zero(determinant(sub))) return k;
      }
    }
  }
  return 0;
}

// Second route to separator existence: some nullspace vector of the
// evaluation matrix of X \ {p} has nonzero value at p.
template <class K>
bool separator_exists_by_nullspace(const PointSet<K>& x, const BiPoint<K>& p, const Bidegree& d) {
  const auto basis = nullspace(evaluation_matrix(x.without(p), d));
  const auto row_p = monomial_row(p, d);
  for (const auto& v : basis) {
    K val(0);
    for (std::size_t m = 0; m < v.size(); ++m) val += row_p[m] * v[m];
    if (!FieldTraits<K>::is_zero(val)) return true;
  }
  return false;
}

}  // namespace bipoints::oracles
