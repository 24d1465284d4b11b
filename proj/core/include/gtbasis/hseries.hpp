#pragma once

// Truncated power series in h_2..h_m whose coefficients are polynomials in x.
// This is the exact expansion engine behind the generating functions: a
// closed form is built up one dimension at a time with lift_step, mirroring
// the substitution h' -> h'/d_m of the dimension recurrence.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gtbasis/mvpoly.hpp"

namespace gtbasis {

/// Multi-index (k_2, ..., k_m); slot 0 holds k_2.
using HIndex = std::array<std::uint8_t, kMaxDim>;

int index_degree(const HIndex& k);

class HSeries {
 public:
  using TermMap = std::map<HIndex, MPoly>;

  /// Zero series over dimension m (variables h_2..h_m) truncated at total degree `order`.
  HSeries(int m, Ring ring, int order);

  static HSeries one(int m, Ring ring, int order);

  int dim() const { return m_; }
  int order() const { return order_; }
  Ring ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  /// Coefficient at k (zero polynomial if absent or beyond the order).
  MPoly coefficient(const HIndex& k) const;
  /// Add p to the coefficient at k; ignored when |k| exceeds the order.
  void add(const HIndex& k, const MPoly& p);

  HSeries truncated(int new_order) const;

  /// Partial sum  sum_k coeff_k(x) h^k  in floating point. h holds h_2..h_m.
  MultivectorF evaluate(std::span<const double> x, std::span<const double> h) const;

  friend bool operator==(const HSeries& a, const HSeries& b) {
    return a.m_ == b.m_ && a.order_ == b.order_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  int m_;
  Ring ring_;
  int order_;
  TermMap terms_;
};

/// Cauchy product a*b (a's coefficients on the left), truncated at min order.
HSeries series_mul(const HSeries& a, const HSeries& b);

/// (base_0 + base_1 h_var + base_2 h_var^2 + ...)^alpha to order N in the single
/// variable h_var (2 <= var <= m). base_0 must be the constant 1 and every base
/// coefficient must be scalar-valued; otherwise DomainError.
HSeries power_expand(const Rational& alpha, std::span<const MPoly> base, int var, int order);

/// (1 + c1 h_var + c2 h_var^2)^alpha to order N.
HSeries binomial_expand(const Rational& alpha, const MPoly& c1, const MPoly& c2, int var, int order);

/// exp(p h_var) = sum_k p^k h_var^k / k!.
HSeries exp_series(const MPoly& p, int var, int order);

/// 1 / (1 - p h_var) = sum_k p^k h_var^k.
HSeries geometric_series(const MPoly& p, int var, int order);

enum class GfKind { harmonic, monogenic };

/// Lift a series in h_2..h_{m-1} over R^{m-1} to one in h_2..h_m over R^m:
///   harmonic:   H_m = d_m^{1-m/2} H_{m-1}(x', h'/d_m)
///   monogenic:  M_m = (1 + x h_m e_m) d_m^{-m/2} M_{m-1}(x', h'/d_m)
/// with d_m = 1 - 2 x_m h_m + h_m^2 |x|^2. The source order must be >= `order`.
HSeries lift_step(const HSeries& source, GfKind kind, int order);

}  // namespace gtbasis
