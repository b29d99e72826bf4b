#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bipoints/errors.hpp"

namespace bipoints {

// Exact rationals.  mpq_class keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form the rest of the code
// relies on for structural equality.
using Rational = mpq_class;

// Residues modulo a process-wide prime.  The modulus is configured once per
// run (CLI flag or test setup) before any Fp value is created.
class Fp {
 public:
  static constexpr std::uint64_t kDefaultModulus = 1000003;

  Fp() : v_(0) {}
  Fp(std::int64_t n) {  // NOLINT(google-explicit-constructor)
    const std::int64_t m = static_cast<std::int64_t>(modulus());
    std::int64_t r = n % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }

  static std::uint64_t modulus() { return modulus_; }
  static void set_modulus(std::uint64_t p) {
    if (p < 2) throw BadField("modulus must be at least 2");
    modulus_ = p;
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return from_raw(add_mod(a.v_, b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return from_raw(sub_mod(a.v_, b.v_)); }
  friend Fp operator*(Fp a, Fp b) { return from_raw(mul_mod(a.v_, b.v_)); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus_ - v_); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw BadField("division by zero in Fp");
    // Fermat: modulus is prime.
    std::uint64_t base = v_, e = modulus_ - 2, acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul_mod(acc, base);
      base = mul_mod(base, base);
      e >>= 1;
    }
    return from_raw(acc);
  }

  Fp pow(std::uint64_t e) const {
    std::uint64_t base = v_, acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul_mod(acc, base);
      base = mul_mod(base, base);
      e >>= 1;
    }
    return from_raw(acc);
  }

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  static std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + modulus_ - b;
  }
  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus_);
  }

  static inline std::uint64_t modulus_ = kDefaultModulus;
  std::uint64_t v_;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string name() { return "rational"; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_int(std::int64_t n) { return Rational(static_cast<long>(n)); }
  static Rational one() { return Rational(1); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldTraits<Fp> {
  static std::string name() { return "fp:" + std::to_string(Fp::modulus()); }
  static bool is_zero(Fp x) { return x.is_zero(); }
  static Fp from_int(std::int64_t n) { return Fp(n); }
  static Fp one() { return Fp(1); }
  static std::string to_string(Fp x) { return std::to_string(x.value()); }
};

inline bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
    if (n % d == 0) return n == d;
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

}  // namespace bipoints
