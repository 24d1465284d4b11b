#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "gtbasis/clifford.hpp"
#include "gtbasis/scalar.hpp"

namespace gtbasis {

/// Coefficient ring of a polynomial. Gaussian polynomials carry complex
/// rational scalars; Clifford polynomials carry multivectors of R_{0,cdim}
/// (with Gaussian-rational blade coefficients).
struct Ring {
  enum class Kind { gaussian, clifford };
  Kind kind = Kind::gaussian;
  int cdim = 0;

  static Ring gaussian() { return {Kind::gaussian, 0}; }
  static Ring clifford(int dim) { return {Kind::clifford, dim}; }
  bool is_clifford() const { return kind == Kind::clifford; }
  friend bool operator==(Ring, Ring) = default;
};

/// Exponent vector (alpha_1, ..., alpha_m); unused trailing slots stay zero.
using Exponent = std::array<std::uint8_t, kMaxDim>;

int total_degree(const Exponent& e);

/// Sparse multivariate polynomial in x_1..x_m. Coefficients commute with the
/// variables, so a term c * x^alpha is stored as (alpha, c). Zero coefficients
/// are never stored; the zero polynomial has an empty term map.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Multivector>;

  MPoly(int m, Ring ring);

  static MPoly constant(int m, Ring ring, const GaussianRational& c);
  static MPoly constant(int m, Ring ring, const Multivector& c);
  /// x_j, 1-based.
  static MPoly variable(int m, Ring ring, int j);
  static MPoly monomial(int m, Ring ring, const Exponent& e, const Multivector& c);
  /// x_1^2 + ... + x_upto^2 (upto defaults to m).
  static MPoly norm_squared(int m, Ring ring, int upto = -1);
  /// x_1 e_1 + ... + x_upto e_upto in the Clifford ring of dimension m.
  static MPoly clifford_vector(int m, int upto = -1);

  int dim() const { return m_; }
  Ring ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  Multivector coeff(const Exponent& e) const;
  /// Coefficient ring value 1 (scalar blade) in this polynomial's ring.
  Multivector ring_one() const;

  /// Add c * x^e.
  void add_term(const Exponent& e, const Multivector& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const GaussianRational& s);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= GaussianRational(-1); }
  friend MPoly operator*(MPoly a, const GaussianRational& s) { return a *= s; }
  friend MPoly operator*(const GaussianRational& s, MPoly a) { return a *= s; }
  /// Product with the left factor's coefficients on the left.
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.m_ == b.m_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// c * p and p * c for a constant coefficient-ring element.
  MPoly left_mul(const Multivector& c) const;
  MPoly right_mul(const Multivector& c) const;

  MPoly pow(unsigned n) const;
  /// Partial derivative in x_j, 1-based.
  MPoly derivative(int j) const;

  /// Same polynomial in m' >= m variables; a Clifford ring grows to cdim = m'.
  MPoly embed(int new_m) const;
  /// Reinterpret a Gaussian polynomial as a scalar-valued Clifford polynomial.
  MPoly to_clifford(int cdim) const;
  /// Complex conjugation of every coefficient (i -> -i).
  MPoly conj_i() const;
  MPoly real_part() const;
  MPoly imag_part() const;
  /// Clifford conjugation of every coefficient.
  MPoly clifford_conjugate() const;

  Multivector eval(std::span<const GaussianRational> x) const;
  MultivectorF eval(std::span<const double> x) const;

  /// Human-readable form such as "3*x1*x3 + 3i*x2*x3" or "2*x3 + x1*e13".
  std::string to_text() const;

 private:
  void require_compatible(const MPoly& o) const;

  int m_;
  Ring ring_;
  TermMap terms_;
};

/// Value of p at x (exact or float), in the coefficient ring.
Multivector poly_eval(const MPoly& p, std::span<const GaussianRational> x);
MultivectorF poly_eval(const MPoly& p, std::span<const double> x);

/// Sum of second partials in every variable.
MPoly laplacian(const MPoly& p);

/// Dirac operator: sum_j e_j * (d p / d x_j), e_j multiplying from the left.
/// Throws MismatchError for non-Clifford polynomials.
MPoly dirac_apply(const MPoly& p);

/// True iff every term has total degree d; the zero polynomial is homogeneous of any degree.
bool is_homogeneous(const MPoly& p, int d);

}  // namespace gtbasis
