#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bipoints/bidegree.hpp"
#include "bipoints/combinatorics.hpp"
#include "bipoints/errors.hpp"
#include "bipoints/geometry.hpp"
#include "bipoints/matrix.hpp"

namespace bipoints {

// HF_X(i,j) = dim (R/I_X)_(i,j), realized as the rank of the evaluation
// matrix on the degree-(i,j) monomial basis.
template <class K>
std::size_t hilbert_function(const PointSet<K>& x, const Bidegree& d) {
  return rank(evaluation_matrix(x, d));
}

struct HilbertTable {
  int max_i = 0;
  int max_j = 0;
  std::vector<std::size_t> values;  // (max_i+1) x (max_j+1), row-major

  std::size_t at(int i, int j) const { return values[static_cast<std::size_t>(i) * (max_j + 1) + j]; }
};

template <class K>
HilbertTable hilbert_table(const PointSet<K>& x, int max_i, int max_j) {
  HilbertTable t{max_i, max_j, {}};
  t.values.reserve(static_cast<std::size_t>(max_i + 1) * (max_j + 1));
  for (int i = 0; i <= max_i; ++i)
    for (int j = 0; j <= max_j; ++j) t.values.push_back(hilbert_function(x, {i, j}));
  return t;
}

// A separator of p at degree d exists iff removing p drops the Hilbert
// function at d by one.
template <class K>
bool separator_exists(const PointSet<K>& x, const BiPoint<K>& p, const Bidegree& d) {
  const PointSet<K> rest = x.without(p);  // throws PointNotInSet
  return hilbert_function(x, d) == hilbert_function(rest, d) + 1;
}

// Minimal existence degrees scanned over the box [0,bi] x [0,bj].
// hf_x must cover that box for x itself.
template <class K>
DegreeSet degree_set_on_box(const PointSet<K>& x, const HilbertTable& hf_x, const BiPoint<K>& p,
                            int bi, int bj) {
  const PointSet<K> rest = x.without(p);
  std::vector<Bidegree> found;
  for (int i = 0; i <= bi; ++i)
    for (int j = 0; j <= bj; ++j)
      if (hf_x.at(i, j) == hilbert_function(rest, {i, j}) + 1) found.push_back({i, j});
  return minimal_elements(std::move(found));
}

template <class K>
DegreeSet degree_set_on_box(const PointSet<K>& x, const BiPoint<K>& p, int bi, int bj) {
  if (!x.contains(p)) throw PointNotInSet();
  return degree_set_on_box(x, hilbert_table(x, bi, bj), p, bi, bj);
}

// deg_X(p): minimal separator degrees.  The scan box [0,r-1] x [0,s-1]
// suffices because the Hilbert-function difference stabilizes once the
// x-degree reaches r-1 (and symmetrically in j); the enlarged-box property
// test guards this bound.
template <class K>
DegreeSet degree_set(const PointSet<K>& x, const BiPoint<K>& p) {
  if (!x.contains(p)) throw PointNotInSet();
  const int bi = static_cast<int>(x.pi1().size()) - 1;
  const int bj = static_cast<int>(x.pi2().size()) - 1;
  return degree_set_on_box(x, p, bi, bj);
}

// Canonical separator of p at degree d: first nullspace basis vector of the
// evaluation matrix of X \ {p} with nonzero value at p, scaled to value 1.
template <class K>
BiForm<K> extract_separator(const PointSet<K>& x, const BiPoint<K>& p, const Bidegree& d) {
  if (!x.contains(p)) throw PointNotInSet();
  const PointSet<K> rest = x.without(p);
  const auto basis = nullspace(evaluation_matrix(rest, d));
  const auto row_p = monomial_row(p, d);
  for (const auto& v : basis) {
    K val(0);
    for (std::size_t m = 0; m < v.size(); ++m) val += row_p[m] * v[m];
    if (FieldTraits<K>::is_zero(val)) continue;
    BiForm<K> f{d, v};
    const K inv = FieldTraits<K>::one() / val;
    for (K& c : f.coeffs) c *= inv;
    return f;
  }
  throw NoSeparator("no separator of the point at degree (" + std::to_string(d.i) + "," +
                    std::to_string(d.j) + ")");
}

// Theorem-backed degree of a point of an ACM set: (a-1, b-1) with a points
// sharing the second coordinate and b sharing the first.  Combinatorial only.
template <class K>
Bidegree acm_degree_formula(const PointSet<K>& x, const BiPoint<K>& p) {
  if (!x.contains(p)) throw PointNotInSet();
  if (!is_acm_pairwise(incidence(x)).is_acm) throw NotAcm("point set is not ACM");
  const auto a = static_cast<int>(x.col_count(p));
  const auto b = static_cast<int>(x.row_count(p));
  return {a - 1, b - 1};
}

}  // namespace bipoints
