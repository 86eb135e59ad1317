#ifndef HERMGT_SCALAR_HPP
#define HERMGT_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermgt {

// Exact scalars. Rational is kept canonical (lowest terms, positive
// denominator) by GMP; structural equality is mathematical equality.
using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(long k);
// binomial(n, k) = 0 when k < 0 or k > n.
Integer binomial(long n, long k);

// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "p/q" with "/q" omitted when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Exact complex scalar over Q(i); the coefficient field of the library.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r), im(0) {}             // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return GaussianRational(re, -im); }
  // |x|^2 = x * conj(x), always a nonnegative rational.
  Rational norm_sq() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);  // throws on o == 0

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.re, -a.im);
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Compact form "2-3i", "1/2", "i", "0".
std::string to_string(const GaussianRational& x);

using GMatrix = std::vector<std::vector<GaussianRational>>;

// Rank over Q(i) by exact Gauss elimination. Rows may have any common length.
std::size_t exact_rank(GMatrix m);

GMatrix transpose(const GMatrix& m);

}  // namespace hermgt

#endif  // HERMGT_SCALAR_HPP
