#pragma once

#include <vector>

#include "gtbasis/scalar.hpp"

namespace gtbasis {

/// C_k^nu(t) as an exact univariate polynomial; coeffs[i] multiplies t^i.
struct GegenbauerPoly {
  Rational nu;
  int k = 0;
  std::vector<Rational> coeffs;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;
};

/// Gegenbauer polynomial via the three-term recurrence
///   n C_n = 2 t (n + nu - 1) C_{n-1} - (n + 2 nu - 2) C_{n-2},
/// C_0 = 1, C_1 = 2 nu t. Throws DomainError for nu <= 0 or k < 0.
GegenbauerPoly gegenbauer_poly(const Rational& nu, int k);

/// C_k^nu(t) by the forward recurrence, exact.
Rational gegenbauer_eval(const Rational& nu, int k, const Rational& t);
/// Same recurrence in double precision.
double gegenbauer_eval(const Rational& nu, int k, double t);

}  // namespace gtbasis
