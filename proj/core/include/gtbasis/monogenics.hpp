#pragma once

#include <span>
#include <vector>

#include "gtbasis/harmonics.hpp"
#include "gtbasis/hseries.hpp"
#include "gtbasis/mvpoly.hpp"

namespace gtbasis {

/// Label (k_2, ..., k_m) of one spherical monogenic in R^m.
struct MonIndex {
  std::vector<int> k;
  Normalization norm = Normalization::factorial;

  int dim() const { return static_cast<int>(k.size()) + 1; }
  int degree() const;
  void validate() const;
};

/// X^{(k)}_{m,j} = ((m-2+k+2j)/(m-2+2j)) F^{(k)}_{m,j} + F^{(k-1)}_{m,j+1} x' e_m,
/// x' = x_1 e_1 + ... + x_{m-1} e_{m-1}, as a Clifford polynomial in R^m.
MPoly embedding_X(int m, int j, int k);

/// (x_1 - e_12 x_2)^k / k! (factorial) or without the factorial (plain), over Cl_m.
MPoly mon_base(int m, int k2, Normalization norm);

/// mon_k = X^{(k_m)}_{m,k*_{m-1}} ... X^{(k_3)}_{3,k*_2} mon_{k_2}, factors
/// multiplied on the left with the highest dimension leftmost.
MPoly mon_basis(const MonIndex& idx);

/// The same factors multiplied in reverse order (base leftmost). Only useful
/// as a witness that the factor order matters.
MPoly mon_basis_reversed(const MonIndex& idx);

/// All indices of total degree <= max_degree in R^m, lexicographic.
std::vector<MonIndex> enumerate_mon_indices(int m, int max_degree, Normalization norm);

/// M_m(x, h) via M_m = (1 + x h_m e_m) d_m^{-m/2} M_{m-1}(x', h'/d_m), with
/// base exp(x_1 h_2)(cos(x_2 h_2) - e_12 sin(x_2 h_2)) or the plain rational base.
MultivectorF gf_mon_closed(int m, std::span<const double> x, std::span<const double> h, Normalization norm,
                           DomainPolicy policy = DomainPolicy::enforce);

/// Explicit three-dimensional closed form
/// (1 + x h_3 e_3) d^{-3/2} exp((x_1 - e_12 x_2) h_2 / d).
MultivectorF mon3_closed_form(std::span<const double> x, std::span<const double> h);

/// Exact truncated generating function over Cl_m.
HSeries gf_mon_series(int m, int order, Normalization norm);

}  // namespace gtbasis
