#pragma once

// Exact integrals over the unit ball B_m. With every exponent even,
//   int_{B_m} x^alpha dx = prod_i Gamma((alpha_i + 1)/2) / Gamma((|alpha| + m + 2)/2),
// and Gamma at half-integers is rational * sqrt(pi), so the result is
// q * pi^{s/2} with s = 2 floor(m/2). Any odd exponent gives 0.

#include <span>

#include "gtbasis/clifford.hpp"
#include "gtbasis/mvpoly.hpp"
#include "gtbasis/scalar.hpp"

namespace gtbasis {

/// Power of sqrt(pi) carried by every ball integral in R^m.
constexpr int ball_pi_power(int m) { return 2 * (m / 2); }

/// Gamma(n/2) = q * pi^{s/2} for a positive integer n.
PiScaled gamma_half(int n);

PiScaled monomial_ball_integral(int m, std::span<const int> alpha);
PiScaled monomial_ball_integral(int m, const Exponent& alpha);

/// Complex value q * pi^{s/2}.
struct GaussianPiScaled {
  GaussianRational q;
  int s = 0;

  bool is_zero() const { return q.is_zero(); }
  friend bool operator==(const GaussianPiScaled& a, const GaussianPiScaled& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.s == b.s && a.q == b.q;
  }
};

/// Clifford-valued value c * pi^{s/2}.
struct CliffordPiScaled {
  Multivector c;
  int s = 0;
};

/// int_{B_m} p(x) dx for any polynomial, coefficient-wise.
CliffordPiScaled ball_integral(const MPoly& p);

/// <p, q> = int_{B_m} conj(p) q over Gaussian polynomials.
GaussianPiScaled inner_harm(const MPoly& p, const MPoly& q);

/// Full Clifford-valued product int_{B_m} conj(p) q (Clifford conjugation).
CliffordPiScaled inner_mon_full(const MPoly& p, const MPoly& q);

/// Scalar part of inner_mon_full; exactly real for real-rational polynomials.
PiScaled inner_mon(const MPoly& p, const MPoly& q);

}  // namespace gtbasis
