#include "gtbasis/scalar.hpp"

#include <cmath>
#include <numbers>

#include "gtbasis/errors.hpp"

namespace gtbasis {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(const Rational& alpha, unsigned n) {
  Rational acc(1);
  for (unsigned i = 0; i < n; ++i) {
    acc *= (alpha - i);
    acc /= (i + 1);
  }
  return acc;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational n2 = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n2;
  Rational i = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re.get_str();
  if (sgn(z.re) == 0) return z.im.get_str() + "i";
  std::string im = z.im.get_str();
  return "(" + z.re.get_str() + (sgn(z.im) > 0 ? "+" : "") + im + "i)";
}

double PiScaled::to_double() const {
  return q.get_d() * std::pow(std::numbers::pi, 0.5 * s);
}

PiScaled& PiScaled::operator+=(const PiScaled& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (s != o.s) throw MismatchError("adding pi-scaled values with different powers of pi");
  q += o.q;
  return *this;
}

std::string to_string(const PiScaled& v) {
  if (v.is_zero()) return "0";
  std::string out = v.q.get_str();
  if (v.s == 0) return out;
  if (v.s % 2 == 0) return out + "*pi^" + std::to_string(v.s / 2);
  return out + "*pi^(" + std::to_string(v.s) + "/2)";
}

}  // namespace gtbasis
