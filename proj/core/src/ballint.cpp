#include "gtbasis/ballint.hpp"

#include <vector>

#include "gtbasis/errors.hpp"

namespace gtbasis {

PiScaled gamma_half(int n) {
  if (n <= 0) throw DomainError("gamma_half needs a positive argument");
  if (n % 2 == 0) return {factorial(static_cast<unsigned>(n / 2 - 1)), 0};
  // Gamma(1/2) = sqrt(pi), Gamma(z + 1) = z Gamma(z).
  Rational q(1);
  for (int t = 1; t < n; t += 2) q *= make_rational(t, 2);
  return {q, 1};
}

PiScaled monomial_ball_integral(int m, std::span<const int> alpha) {
  if (m < 1 || m > kMaxDim) throw DomainError("dimension out of range");
  if (static_cast<int>(alpha.size()) != m) throw MismatchError("exponent vector length must equal m");
  int total = 0;
  bool odd = false;
  for (int a : alpha) {
    if (a < 0) throw DomainError("exponents must be non-negative");
    if (a % 2 != 0) odd = true;
    total += a;
  }
  if (odd) return {Rational(0), ball_pi_power(m)};
  PiScaled num{Rational(1), 0};
  for (int a : alpha) num = num * gamma_half(a + 1);
  const PiScaled den = gamma_half(total + m + 2);
  return {num.q / den.q, num.s - den.s};
}

PiScaled monomial_ball_integral(int m, const Exponent& alpha) {
  std::vector<int> a(alpha.begin(), alpha.begin() + m);
  return monomial_ball_integral(m, a);
}

CliffordPiScaled ball_integral(const MPoly& p) {
  const int m = p.dim();
  CliffordPiScaled out{Multivector(p.ring().cdim), ball_pi_power(m)};
  for (const auto& [e, c] : p.terms()) {
    PiScaled v = monomial_ball_integral(m, e);
    if (v.is_zero()) continue;
    out.c += c * GaussianRational(v.q);
  }
  return out;
}

namespace {

void require_same(const MPoly& p, const MPoly& q) {
  if (p.dim() != q.dim()) throw MismatchError("inner product of polynomials in different dimensions");
  if (!(p.ring() == q.ring())) throw MismatchError("inner product of polynomials over different rings");
}

}  // namespace

GaussianPiScaled inner_harm(const MPoly& p, const MPoly& q) {
  require_same(p, q);
  if (p.ring().is_clifford()) throw MismatchError("inner_harm expects Gaussian polynomials");
  CliffordPiScaled v = ball_integral(p.conj_i() * q);
  return {v.c.scalar_part(), v.s};
}

CliffordPiScaled inner_mon_full(const MPoly& p, const MPoly& q) {
  require_same(p, q);
  if (!p.ring().is_clifford()) throw MismatchError("inner_mon expects Clifford polynomials");
  return ball_integral(p.clifford_conjugate().conj_i() * q);
}

PiScaled inner_mon(const MPoly& p, const MPoly& q) {
  CliffordPiScaled v = inner_mon_full(p, q);
  return {v.c.scalar_part().re, v.s};
}

}  // namespace gtbasis
