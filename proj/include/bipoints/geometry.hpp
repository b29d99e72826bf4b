#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bipoints/bidegree.hpp"
#include "bipoints/errors.hpp"
#include "bipoints/matrix.hpp"

namespace bipoints {

enum class Slot { first, second };

// A point of P^1 in canonical form: [a : 1] when the second coordinate is
// nonzero, [1 : 0] otherwise.  Canonical form makes projective equality
// structural.
template <class K>
struct Point1 {
  K a, b;
  friend bool operator==(const Point1&, const Point1&) = default;
};

template <class K>
Point1<K> canonical(const K& raw_a, const K& raw_b) {
  if (!FieldTraits<K>::is_zero(raw_b)) return {raw_a / raw_b, FieldTraits<K>::one()};
  if (!FieldTraits<K>::is_zero(raw_a)) return {FieldTraits<K>::one(), K(0)};
  throw ZeroPoint();
}

template <class K>
struct BiPoint {
  Point1<K> first, second;
  friend bool operator==(const BiPoint&, const BiPoint&) = default;
};

template <class K>
BiPoint<K> make_bipoint(const K& a, const K& b, const K& c, const K& d) {
  return {canonical(a, b), canonical(c, d)};
}

// The form c0*x0 + c1*x1 in one slot's variable pair.
template <class K>
struct LinearForm {
  Slot slot;
  K c0, c1;
};

// b*x0 - a*x1 vanishes at [a:b] and nowhere else on P^1.
template <class K>
LinearForm<K> linear_form_vanishing_at(const Point1<K>& p, Slot slot) {
  return {slot, p.b, -p.a};
}

// Bihomogeneous form of bidegree (i,j) as a dense coefficient vector.
// Coefficient of x0^(i-a) x1^a y0^(j-c) y1^c sits at index a*(j+1)+c.
template <class K>
struct BiForm {
  Bidegree degree;
  std::vector<K> coeffs;  // (i+1)*(j+1)

  static BiForm constant(const K& value) { return {{0, 0}, {value}}; }
  static BiForm one() { return constant(FieldTraits<K>::one()); }
};

struct Monomial {
  int x0, x1, y0, y1;  // exponents
};

inline std::vector<Monomial> monomial_basis(const Bidegree& d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(d.i + 1) * (d.j + 1));
  for (int a = 0; a <= d.i; ++a)
    for (int c = 0; c <= d.j; ++c) out.push_back({d.i - a, a, d.j - c, c});
  return out;
}

namespace detail {

template <class K>
std::vector<K> powers(const K& x, int n) {
  std::vector<K> p(static_cast<std::size_t>(n) + 1);
  p[0] = FieldTraits<K>::one();
  for (int e = 1; e <= n; ++e) p[e] = p[e - 1] * x;
  return p;
}

}  // namespace detail

// Values of the degree-d monomial basis at p, in basis order.
template <class K>
std::vector<K> monomial_row(const BiPoint<K>& p, const Bidegree& d) {
  const auto xa = detail::powers(p.first.a, d.i);
  const auto xb = detail::powers(p.first.b, d.i);
  const auto ya = detail::powers(p.second.a, d.j);
  const auto yb = detail::powers(p.second.b, d.j);
  std::vector<K> row;
  row.reserve(static_cast<std::size_t>(d.i + 1) * (d.j + 1));
  for (int a = 0; a <= d.i; ++a)
    for (int c = 0; c <= d.j; ++c) row.push_back(xa[d.i - a] * xb[a] * ya[d.j - c] * yb[c]);
  return row;
}

template <class K>
K evaluate(const BiForm<K>& f, const BiPoint<K>& p) {
  const auto row = monomial_row(p, f.degree);
  K acc(0);
  for (std::size_t m = 0; m < row.size(); ++m) acc += f.coeffs[m] * row[m];
  return acc;
}

template <class K>
BiForm<K> lift(const LinearForm<K>& l) {
  if (l.slot == Slot::first) return {{1, 0}, {l.c0, l.c1}};
  return {{0, 1}, {l.c0, l.c1}};
}

template <class K>
BiForm<K> product(const BiForm<K>& f, const BiForm<K>& g) {
  const Bidegree d{f.degree.i + g.degree.i, f.degree.j + g.degree.j};
  BiForm<K> out{d, std::vector<K>(static_cast<std::size_t>(d.i + 1) * (d.j + 1), K(0))};
  for (int a1 = 0; a1 <= f.degree.i; ++a1)
    for (int c1 = 0; c1 <= f.degree.j; ++c1) {
      const K& cf = f.coeffs[static_cast<std::size_t>(a1) * (f.degree.j + 1) + c1];
      if (FieldTraits<K>::is_zero(cf)) continue;
      for (int a2 = 0; a2 <= g.degree.i; ++a2)
        for (int c2 = 0; c2 <= g.degree.j; ++c2) {
          const K& cg = g.coeffs[static_cast<std::size_t>(a2) * (g.degree.j + 1) + c2];
          if (FieldTraits<K>::is_zero(cg)) continue;
          out.coeffs[static_cast<std::size_t>(a1 + a2) * (d.j + 1) + (c1 + c2)] += cf * cg;
        }
    }
  return out;
}

// A finite set of distinct points of P^1 x P^1.  Insertion order is kept;
// pi1/pi2 list the distinct projections in order of first appearance.
template <class K>
class PointSet {
 public:
  explicit PointSet(std::vector<BiPoint<K>> pts) : points_(std::move(pts)) {
    for (std::size_t k = 0; k < points_.size(); ++k) {
      for (std::size_t m = 0; m < k; ++m)
        if (points_[m] == points_[k]) throw DuplicatePoint("points " + std::to_string(m) + " and " + std::to_string(k));
      row_of_.push_back(index_in(pi1_, points_[k].first));
      col_of_.push_back(index_in(pi2_, points_[k].second));
    }
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<BiPoint<K>>& points() const { return points_; }
  const BiPoint<K>& point(std::size_t k) const { return points_[k]; }
  const std::vector<Point1<K>>& pi1() const { return pi1_; }
  const std::vector<Point1<K>>& pi2() const { return pi2_; }
  // grid coordinates of point k in the pi1/pi2 indexing
  std::size_t row_of(std::size_t k) const { return row_of_[k]; }
  std::size_t col_of(std::size_t k) const { return col_of_[k]; }

  bool contains(const BiPoint<K>& p) const { return find(p) < points_.size(); }

  std::size_t find(const BiPoint<K>& p) const {
    for (std::size_t k = 0; k < points_.size(); ++k)
      if (points_[k] == p) return k;
    return points_.size();
  }

  // number of points sharing p's first coordinate (|X_{P,1}|)
  std::size_t row_count(const BiPoint<K>& p) const {
    std::size_t n = 0;
    for (const auto& q : points_)
      if (q.first == p.first) ++n;
    return n;
  }

  // number of points sharing p's second coordinate (|X_{Q,2}|)
  std::size_t col_count(const BiPoint<K>& p) const {
    std::size_t n = 0;
    for (const auto& q : points_)
      if (q.second == p.second) ++n;
    return n;
  }

  // X minus {p}, original order kept, projections recomputed
  PointSet without(const BiPoint<K>& p) const {
    const std::size_t k = find(p);
    if (k == points_.size()) throw PointNotInSet();
    std::vector<BiPoint<K>> rest;
    rest.reserve(points_.size() - 1);
    for (std::size_t m = 0; m < points_.size(); ++m)
      if (m != k) rest.push_back(points_[m]);
    return PointSet(std::move(rest));
  }

 private:
  std::size_t index_in(std::vector<Point1<K>>& seq, const Point1<K>& p) {
    for (std::size_t t = 0; t < seq.size(); ++t)
      if (seq[t] == p) return t;
    seq.push_back(p);
    return seq.size() - 1;
  }

  std::vector<BiPoint<K>> points_;
  std::vector<Point1<K>> pi1_, pi2_;
  std::vector<std::size_t> row_of_, col_of_;
};

// |X| x (i+1)(j+1) matrix of monomial values at the points of x.
template <class K>
Matrix<K> evaluation_matrix(const PointSet<K>& x, const Bidegree& d) {
  Matrix<K> m(x.size(), static_cast<std::size_t>(d.i + 1) * (d.j + 1));
  for (std::size_t k = 0; k < x.size(); ++k) {
    auto row = monomial_row(x.point(k), d);
    for (std::size_t c = 0; c < row.size(); ++c) m.at(k, c) = std::move(row[c]);
  }
  return m;
}

}  // namespace bipoints
