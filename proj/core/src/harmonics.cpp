#include "gtbasis/harmonics.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "gtbasis/errors.hpp"
#include "gtbasis/gegenbauer.hpp"

namespace gtbasis {

int BasisIndex::degree() const { return std::accumulate(k.begin(), k.end(), 0); }

void BasisIndex::validate() const {
  if (k.empty()) throw DomainError("basis index needs at least k_2 (m >= 2)");
  if (dim() > kMaxDim) throw DomainError("dimension exceeds the supported maximum");
  for (int v : k) {
    if (v < 0) throw DomainError("basis index entries must be non-negative");
  }
}

DomainBox DomainBox::conservative(int m, Normalization norm) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension out of range");
  DomainBox box;
  box.m = m;
  box.bounds.assign(static_cast<std::size_t>(m - 1), 0.0);
  const double base = norm == Normalization::factorial ? std::numeric_limits<double>::infinity() : 1.0;
  box.bounds[0] = base * std::pow(0.25, m - 2);
  for (int r = 3; r <= m; ++r) box.bounds[r - 2] = 0.5 * std::pow(0.25, m - r);
  return box;
}

bool DomainBox::contains(std::span<const double> h) const {
  if (h.size() != bounds.size()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!std::isfinite(h[i]) || !(std::abs(h[i]) <= bounds[i])) return false;
  }
  return true;
}

MPoly embedding_F(int m, int j, int k, Ring ring) {
  if (m < 3) throw DomainError("embedding factors are defined for m >= 3");
  if (j < 0) throw DomainError("embedding factor shift j must be non-negative");
  if (k < -1) throw DomainError("embedding factor degree must be >= -1");
  if (ring.is_clifford()) ring = Ring::clifford(m);
  MPoly out(m, ring);
  if (k == -1) return out;
  // |x|^k C_k(x_m/|x|) = sum_i c_i x_m^i (|x|^2)^{(k-i)/2}; only i = k mod 2 occur.
  const GegenbauerPoly c = gegenbauer_poly(make_rational(m + 2 * j - 2, 2), k);
  const MPoly r2 = MPoly::norm_squared(m, ring);
  const MPoly xm = MPoly::variable(m, ring, m);
  for (int i = k; i >= 0; i -= 2) {
    if (sgn(c.coeffs[i]) == 0) continue;
    out += (xm.pow(static_cast<unsigned>(i)) * r2.pow(static_cast<unsigned>((k - i) / 2))) *
           GaussianRational(c.coeffs[i]);
  }
  return out;
}

MPoly harm_base(int m, int k2, Sign sign, Normalization norm) {
  if (m < 2) throw DomainError("dimension must be at least 2");
  if (k2 < 0) throw DomainError("degree must be non-negative");
  const Ring ring = Ring::gaussian();
  MPoly z = MPoly::variable(m, ring, 1) +
            MPoly::variable(m, ring, 2) * (sign == Sign::plus ? GaussianRational::i() : -GaussianRational::i());
  MPoly out = z.pow(static_cast<unsigned>(k2));
  if (norm == Normalization::factorial) out *= GaussianRational(1 / factorial(static_cast<unsigned>(k2)));
  return out;
}

MPoly harm_basis(const BasisIndex& idx) {
  idx.validate();
  const int m = idx.dim();
  MPoly out = harm_base(m, idx.k[0], idx.sign, idx.norm);
  int partial = idx.k[0];
  for (int r = 3; r <= m; ++r) {
    const int kr = idx.k[r - 2];
    if (kr != 0) out = out * embedding_F(r, partial, kr).embed(m);
    partial += kr;
  }
  return out;
}

std::pair<MPoly, MPoly> real_basis(const BasisIndex& idx) {
  BasisIndex plus = idx;
  plus.sign = Sign::plus;
  MPoly p = harm_basis(plus);
  return {p.real_part(), p.imag_part()};
}

std::vector<BasisIndex> enumerate_harm_indices(int m, int max_degree, Normalization norm) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension out of range");
  std::vector<BasisIndex> out;
  std::vector<int> k(static_cast<std::size_t>(m - 1), 0);
  // Odometer over k in lexicographic order, pruned by total degree.
  auto emit = [&]() {
    out.push_back({k, Sign::plus, norm});
    if (k[0] > 0) out.push_back({k, Sign::minus, norm});
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int budget) {
    if (pos == k.size()) {
      emit();
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      k[pos] = v;
      rec(pos + 1, budget - v);
    }
    k[pos] = 0;
  };
  rec(0, max_degree);
  return out;
}

namespace detail {

void check_gf_arguments(int m, std::span<const double> x, std::span<const double> h, Normalization norm,
                        DomainPolicy policy) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension out of range");
  if (static_cast<int>(x.size()) != m) throw MismatchError("x must have m components");
  if (static_cast<int>(h.size()) != m - 1) throw MismatchError("h must have m-1 components");
  for (double v : x) {
    if (!std::isfinite(v)) throw DomainError("x must be finite");
  }
  for (double v : h) {
    if (!std::isfinite(v)) throw DomainError("h must be finite");
  }
  if (policy == DomainPolicy::unsafe) return;
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  if (r2 > 1.0 + 1e-12) throw DomainError("|x| must not exceed 1");
  if (!DomainBox::conservative(m, norm).contains(h)) throw DomainError("h lies outside the convergence box");
}

double kernel_d(int m, std::span<const double> x, double hm) {
  double r2 = 0.0;
  for (int j = 0; j < m; ++j) r2 += x[j] * x[j];
  const double d = 1.0 - 2.0 * x[m - 1] * hm + hm * hm * r2;
  if (!(d > 0.0)) throw SingularDomainError("kernel d_m is not positive");
  return d;
}

}  // namespace detail

namespace {

std::complex<double> harm_closed_rec(int m, std::span<const double> x, std::vector<double> h, Sign sign,
                                     Normalization norm) {
  if (m == 2) {
    const double s = sign == Sign::plus ? 1.0 : -1.0;
    const std::complex<double> z(x[0], s * x[1]);
    if (norm == Normalization::factorial) return std::exp(z * h[0]);
    const double denom = 1.0 - 2.0 * x[0] * h[0] + h[0] * h[0] * (x[0] * x[0] + x[1] * x[1]);
    if (!(denom > 0.0)) throw SingularDomainError("plain base denominator is not positive");
    return (1.0 - std::conj(z) * h[0]) / denom;
  }
  const double d = detail::kernel_d(m, x, h[m - 2]);
  h.pop_back();
  for (double& v : h) v /= d;
  return std::pow(d, 1.0 - 0.5 * m) * harm_closed_rec(m - 1, x.first(static_cast<std::size_t>(m - 1)), std::move(h),
                                                       sign, norm);
}

}  // namespace

std::complex<double> gf_harm_closed(int m, std::span<const double> x, std::span<const double> h, Sign sign,
                                    Normalization norm, DomainPolicy policy) {
  detail::check_gf_arguments(m, x, h, norm, policy);
  return harm_closed_rec(m, x, std::vector<double>(h.begin(), h.end()), sign, norm);
}

std::complex<double> harm3_closed_form(std::span<const double> x, std::span<const double> h, Sign sign) {
  if (x.size() != 3 || h.size() != 2) throw MismatchError("expected x in R^3 and h = (h_2, h_3)");
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  const double d = 1.0 - 2.0 * x[2] * h[1] + h[1] * h[1] * r2;
  if (!(d > 0.0)) throw SingularDomainError("kernel d_3 is not positive");
  const std::complex<double> z(x[0], sign == Sign::plus ? x[1] : -x[1]);
  return std::exp(z * h[0] / d) / std::sqrt(d);
}

HSeries gf_harm_series(int m, int order, Sign sign, Normalization norm) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension out of range");
  const MPoly z = harm_base(2, 1, sign, Normalization::plain);
  HSeries s = norm == Normalization::factorial ? exp_series(z, 2, order) : geometric_series(z, 2, order);
  for (int r = 3; r <= m; ++r) s = lift_step(s, GfKind::harmonic, order);
  return s;
}

}  // namespace gtbasis
