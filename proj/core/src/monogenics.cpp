#include "gtbasis/monogenics.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "gtbasis/errors.hpp"

namespace gtbasis {

int MonIndex::degree() const { return std::accumulate(k.begin(), k.end(), 0); }

void MonIndex::validate() const {
  if (k.empty()) throw DomainError("monogenic index needs at least k_2 (m >= 2)");
  if (dim() > kMaxDim) throw DomainError("dimension exceeds the supported maximum");
  for (int v : k) {
    if (v < 0) throw DomainError("monogenic index entries must be non-negative");
  }
}

MPoly embedding_X(int m, int j, int k) {
  if (m < 3) throw DomainError("embedding factors are defined for m >= 3");
  if (j < 0 || k < 0) throw DomainError("embedding factor arguments must be non-negative");
  const Ring ring = Ring::clifford(m);
  MPoly out = embedding_F(m, j, k, ring) * GaussianRational(make_rational(m - 2 + k + 2 * j, m - 2 + 2 * j));
  if (k >= 1) {
    const MPoly xe = MPoly::clifford_vector(m, m - 1).right_mul(Multivector::basis(m, Blade{1u << (m - 1)}));
    out += embedding_F(m, j + 1, k - 1, ring) * xe;
  }
  return out;
}

MPoly mon_base(int m, int k2, Normalization norm) {
  if (m < 2) throw DomainError("dimension must be at least 2");
  if (k2 < 0) throw DomainError("degree must be non-negative");
  const Ring ring = Ring::clifford(m);
  MPoly z = MPoly::variable(m, ring, 1) -
            MPoly::variable(m, ring, 2).left_mul(Multivector::basis(m, blade_of({1, 2})));
  MPoly out = z.pow(static_cast<unsigned>(k2));
  if (norm == Normalization::factorial) out *= GaussianRational(1 / factorial(static_cast<unsigned>(k2)));
  return out;
}

namespace {

MPoly mon_product(const MonIndex& idx, bool reversed) {
  idx.validate();
  const int m = idx.dim();
  MPoly out = mon_base(m, idx.k[0], idx.norm);
  int partial = idx.k[0];
  for (int r = 3; r <= m; ++r) {
    const int kr = idx.k[r - 2];
    if (kr != 0) {
      MPoly factor = embedding_X(r, partial, kr).embed(m);
      out = reversed ? out * factor : factor * out;
    }
    partial += kr;
  }
  return out;
}

}  // namespace

MPoly mon_basis(const MonIndex& idx) { return mon_product(idx, false); }

MPoly mon_basis_reversed(const MonIndex& idx) { return mon_product(idx, true); }

std::vector<MonIndex> enumerate_mon_indices(int m, int max_degree, Normalization norm) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension out of range");
  std::vector<MonIndex> out;
  std::vector<int> k(static_cast<std::size_t>(m - 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int budget) {
    if (pos == k.size()) {
      out.push_back({k, norm});
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

namespace {

using C = std::complex<double>;

MultivectorF mon2_base(std::span<const double> x, double h2, Normalization norm) {
  const Blade e12 = blade_of({1, 2});
  if (norm == Normalization::factorial) {
    const double g = std::exp(x[0] * h2);
    return MultivectorF::scalar(2, C(g * std::cos(x[1] * h2))) +
           MultivectorF::basis(2, e12, C(-g * std::sin(x[1] * h2)));
  }
  const double denom = 1.0 - 2.0 * x[0] * h2 + h2 * h2 * (x[0] * x[0] + x[1] * x[1]);
  if (!(denom > 0.0)) throw SingularDomainError("plain base denominator is not positive");
  return MultivectorF::scalar(2, C((1.0 - x[0] * h2) / denom)) + MultivectorF::basis(2, e12, C(-x[1] * h2 / denom));
}

MultivectorF prefactor(int m, std::span<const double> x, double hm) {
  std::vector<C> comps(x.begin(), x.begin() + m);
  MultivectorF xv = MultivectorF::vector(m, comps);
  return MultivectorF::scalar(m, C(1)) + xv * MultivectorF::basis(m, Blade{1u << (m - 1)}, C(hm));
}

MultivectorF mon_closed_rec(int m, std::span<const double> x, std::vector<double> h, Normalization norm) {
  if (m == 2) return mon2_base(x, h[0], norm);
  const double hm = h[m - 2];
  const double d = detail::kernel_d(m, x, hm);
  h.pop_back();
  for (double& v : h) v /= d;
  MultivectorF inner = mon_closed_rec(m - 1, x.first(static_cast<std::size_t>(m - 1)), std::move(h), norm).embed(m);
  return prefactor(m, x, hm) * inner * C(std::pow(d, -0.5 * m));
}

}  // namespace

MultivectorF gf_mon_closed(int m, std::span<const double> x, std::span<const double> h, Normalization norm,
                           DomainPolicy policy) {
  detail::check_gf_arguments(m, x, h, norm, policy);
  return mon_closed_rec(m, x, std::vector<double>(h.begin(), h.end()), norm);
}

MultivectorF mon3_closed_form(std::span<const double> x, std::span<const double> h) {
  if (x.size() != 3 || h.size() != 2) throw MismatchError("expected x in R^3 and h = (h_2, h_3)");
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  const double d = 1.0 - 2.0 * x[2] * h[1] + h[1] * h[1] * r2;
  if (!(d > 0.0)) throw SingularDomainError("kernel d_3 is not positive");
  const double t = h[0] / d;
  const double g = std::exp(x[0] * t);
  MultivectorF expo = MultivectorF::scalar(3, C(g * std::cos(x[1] * t))) +
                      MultivectorF::basis(3, blade_of({1, 2}), C(-g * std::sin(x[1] * t)));
  MultivectorF pre = MultivectorF::scalar(3, C(1)) + MultivectorF::basis(3, blade_of({1, 3}), C(x[0] * h[1])) +
                     MultivectorF::basis(3, blade_of({2, 3}), C(x[1] * h[1])) +
                     MultivectorF::scalar(3, C(-x[2] * h[1]));
  return pre * expo * C(std::pow(d, -1.5));
}

HSeries gf_mon_series(int m, int order, Normalization norm) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension out of range");
  const MPoly z = mon_base(2, 1, Normalization::plain);
  HSeries s = norm == Normalization::factorial ? exp_series(z, 2, order) : geometric_series(z, 2, order);
  for (int r = 3; r <= m; ++r) s = lift_step(s, GfKind::monogenic, order);
  return s;
}

}  // namespace gtbasis
