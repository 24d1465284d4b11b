#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace gtbasis {

/// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational factorial(unsigned n);
/// Generalized binomial coefficient (alpha choose n) for rational alpha.
Rational binomial(const Rational& alpha, unsigned n);
bool is_integer(const Rational& q);

/// a + b i with rational a, b.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}  // NOLINT(implicit)
  GaussianRational(long r) : re(r), im(0) {}             // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const Rational& q);
std::string to_string(const GaussianRational& z);

/// Exact value q * pi^(s/2). Values with different s only add when one side is zero.
struct PiScaled {
  Rational q;
  int s = 0;

  PiScaled() = default;
  PiScaled(Rational q_, int s_) : q(std::move(q_)), s(s_) {}

  bool is_zero() const { return sgn(q) == 0; }
  double to_double() const;

  PiScaled& operator+=(const PiScaled& o);
  friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }
  friend PiScaled operator-(const PiScaled& a) { return {-a.q, a.s}; }
  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) { return {a.q * b.q, a.s + b.s}; }
  friend PiScaled operator*(const Rational& r, const PiScaled& a) { return {r * a.q, a.s}; }
  /// Equality of values: two zeros compare equal regardless of s.
  friend bool operator==(const PiScaled& a, const PiScaled& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.s == b.s && a.q == b.q;
  }
};

std::string to_string(const PiScaled& v);

}  // namespace gtbasis
