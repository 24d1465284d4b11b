#pragma once

#include <complex>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "gtbasis/hseries.hpp"
#include "gtbasis/mvpoly.hpp"

namespace gtbasis {

enum class Sign { plus, minus };
/// factorial: base (x_1 +- i x_2)^k / k!;  plain: base (x_1 +- i x_2)^k.
enum class Normalization { factorial, plain };

/// Label (k_2, ..., k_m) of one basis element in R^m, m = k.size() + 1.
struct BasisIndex {
  std::vector<int> k;
  Sign sign = Sign::plus;
  Normalization norm = Normalization::factorial;

  int dim() const { return static_cast<int>(k.size()) + 1; }
  int degree() const;
  /// Throws DomainError when m < 2, m > kMaxDim, or an entry is negative.
  void validate() const;
};

/// Conservative convergence box for the generating functions in R^m:
/// |h_m| <= 1/2, |h_r| <= (1/2) 4^{-(m-r)} for 3 <= r < m, and for h_2 the base
/// radius (unbounded for the exponential base, 1 for the plain base) shrunk by 4^{-(m-2)}.
struct DomainBox {
  int m = 2;
  std::vector<double> bounds;  // bounds[r-2] for h_r; +infinity means unbounded

  static DomainBox conservative(int m, Normalization norm = Normalization::factorial);
  bool contains(std::span<const double> h) const;
};

/// Whether closed-form evaluators enforce |x| <= 1 and h in DomainBox.
enum class DomainPolicy { enforce, unsafe };

/// F^{(k)}_{m,j} = |x|^k C_k^{m/2+j-1}(x_m / |x|) as a polynomial in x_1..x_m.
/// k = -1 gives the zero polynomial. Throws DomainError when m < 3.
MPoly embedding_F(int m, int j, int k, Ring ring = Ring::gaussian());

/// (x_1 +- i x_2)^k / k! (factorial) or (x_1 +- i x_2)^k (plain) in R^m.
MPoly harm_base(int m, int k2, Sign sign, Normalization norm);

/// harm_k^{+-} = base(k_2) * prod_{r=3}^{m} F^{(k_r)}_{r, k_2+...+k_{r-1}}.
MPoly harm_basis(const BasisIndex& idx);

/// (Re harm_k^+, Im harm_k^+) as real-rational polynomials.
std::pair<MPoly, MPoly> real_basis(const BasisIndex& idx);

/// All indices of total degree <= max_degree in R^m in lexicographic order.
/// When k_2 = 0 the two signs coincide and only Sign::plus is emitted.
std::vector<BasisIndex> enumerate_harm_indices(int m, int max_degree, Normalization norm);

/// H_m^{+-}(x, h) via the downward dimension recurrence.
std::complex<double> gf_harm_closed(int m, std::span<const double> x, std::span<const double> h, Sign sign,
                                    Normalization norm, DomainPolicy policy = DomainPolicy::enforce);

/// Explicit three-dimensional closed form
/// d^{-1/2} exp((x_1 +- i x_2) h_2 / d), d = 1 - 2 x_3 h_3 + h_3^2 |x|^2.
std::complex<double> harm3_closed_form(std::span<const double> x, std::span<const double> h, Sign sign);

/// Exact truncated generating function: base series lifted dimension by dimension.
HSeries gf_harm_series(int m, int order, Sign sign, Normalization norm);

namespace detail {
/// Checks shared by the closed-form evaluators: arities, |x| <= 1 and the box.
void check_gf_arguments(int m, std::span<const double> x, std::span<const double> h, Normalization norm,
                        DomainPolicy policy);
/// d = 1 - 2 x_m h_m + h_m^2 |x|^2 over the first m coordinates; throws SingularDomainError if d <= 0.
double kernel_d(int m, std::span<const double> x, double hm);
}  // namespace detail

}  // namespace gtbasis
