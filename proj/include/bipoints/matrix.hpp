#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "bipoints/field.hpp"

namespace bipoints {

// Dense row-major matrix over an exact field K.
template <class K>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<K> entries;  // rows * cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, K(0)) {}

  K& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const K& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

namespace detail {

// Plain Gaussian elimination rank.  Pivot choice is the first nonzero entry
// in column order, so the elimination (and everything downstream of it) is
// reproducible.
template <class K>
std::size_t rank_gauss(Matrix<K> m) {
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
    std::size_t piv = rk;
    while (piv < m.rows && FieldTraits<K>::is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != rk)
      for (std::size_t c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rk, c));
    const K inv = FieldTraits<K>::one() / m.at(rk, col);
    for (std::size_t r = rk + 1; r < m.rows; ++r) {
      if (FieldTraits<K>::is_zero(m.at(r, col))) continue;
      const K f = m.at(r, col) * inv;
      m.at(r, col) = K(0);
      for (std::size_t c = col + 1; c < m.cols; ++c) m.at(r, c) -= f * m.at(rk, c);
    }
    ++rk;
  }
  return rk;
}

// Fraction-free (Bareiss) rank for rational input: clear denominators per
// row, then run the two-term integer recurrence with exact division by the
// previous pivot.  Keeps intermediate operands integral and bounded.
inline std::size_t rank_bareiss(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m.at(r, c);
      a[r * cols + c] = q.get_num() * (lcm / q.get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t piv = rk;
    while (piv < rows && at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rk)
      for (std::size_t c = col; c < cols; ++c) mpz_swap(at(piv, c).get_mpz_t(), at(rk, c).get_mpz_t());
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        at(r, c) = at(rk, col) * at(r, c) - at(r, col) * at(rk, c);
        mpz_divexact(at(r, c).get_mpz_t(), at(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      at(r, col) = 0;
    }
    prev = at(rk, col);
    ++rk;
  }
  return rk;
}

}  // namespace detail

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if constexpr (std::is_same_v<K, Rational>)
    return detail::rank_bareiss(m);
  else
    return detail::rank_gauss(m);
}

// Reduced row echelon form; returns the pivot column indices.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
    std::size_t piv = rk;
    while (piv < m.rows && FieldTraits<K>::is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != rk)
      for (std::size_t c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rk, c));
    const K inv = FieldTraits<K>::one() / m.at(rk, col);
    for (std::size_t c = col; c < m.cols; ++c) m.at(rk, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rk || FieldTraits<K>::is_zero(m.at(r, col))) continue;
      const K f = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rk, c);
    }
    pivots.push_back(col);
    ++rk;
  }
  return pivots;
}

// Canonical nullspace basis: one vector per free column (ascending), free
// entry 1, pivot entries read off the reduced echelon form.
template <class K>
std::vector<std::vector<K>> nullspace(const Matrix<K>& m) {
  if (m.cols == 0) return {};
  Matrix<K> r = m;
  std::vector<std::size_t> pivots;
  if (m.rows > 0) pivots = rref_in_place(r);

  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<K>> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<K> v(m.cols, K(0));
    v[free_col] = FieldTraits<K>::one();
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(pr, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bipoints
