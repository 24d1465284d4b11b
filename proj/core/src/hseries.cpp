#include "gtbasis/hseries.hpp"

#include <cmath>

#include "gtbasis/errors.hpp"

namespace gtbasis {

int index_degree(const HIndex& k) {
  int d = 0;
  for (auto a : k) d += a;
  return d;
}

HSeries::HSeries(int m, Ring ring, int order) : m_(m), ring_(ring), order_(order) {
  if (m < 2 || m > kMaxDim) throw DomainError("series dimension must lie in [2, 8]");
  if (order < 0) throw DomainError("series order must be non-negative");
  if (order > 255) throw DomainError("series order too large");
}

HSeries HSeries::one(int m, Ring ring, int order) {
  HSeries s(m, ring, order);
  s.add(HIndex{}, MPoly::constant(m, ring, GaussianRational(1)));
  return s;
}

MPoly HSeries::coefficient(const HIndex& k) const {
  auto it = terms_.find(k);
  if (it == terms_.end()) return MPoly(m_, ring_);
  return it->second;
}

void HSeries::add(const HIndex& k, const MPoly& p) {
  if (p.dim() != m_ || !(p.ring() == ring_)) throw MismatchError("series coefficient has the wrong dimension or ring");
  for (int j = m_ - 1; j < kMaxDim; ++j) {
    if (k[j] != 0) throw DomainError("series index uses a variable beyond h_m");
  }
  if (index_degree(k) > order_ || p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HSeries HSeries::truncated(int new_order) const {
  if (new_order > order_) throw DomainError("cannot raise the order of a truncated series");
  HSeries out(m_, ring_, new_order);
  for (const auto& [k, p] : terms_) {
    if (index_degree(k) <= new_order) out.terms_.emplace(k, p);
  }
  return out;
}

MultivectorF HSeries::evaluate(std::span<const double> x, std::span<const double> h) const {
  if (static_cast<int>(h.size()) != m_ - 1) throw MismatchError("h must have m-1 components");
  MultivectorF acc(ring_.cdim);
  for (const auto& [k, p] : terms_) {
    double w = 1.0;
    for (int j = 0; j < m_ - 1; ++j) w *= std::pow(h[j], k[j]);
    if (w == 0.0) continue;
    acc += p.eval(x) * std::complex<double>(w);
  }
  return acc;
}

HSeries series_mul(const HSeries& a, const HSeries& b) {
  if (a.dim() != b.dim() || !(a.ring() == b.ring())) throw MismatchError("series dimension or ring mismatch");
  int order = std::min(a.order(), b.order());
  HSeries out(a.dim(), a.ring(), order);
  for (const auto& [ka, pa] : a.terms()) {
    int da = index_degree(ka);
    if (da > order) continue;
    for (const auto& [kb, pb] : b.terms()) {
      if (da + index_degree(kb) > order) continue;
      HIndex k{};
      for (int j = 0; j < kMaxDim; ++j) k[j] = static_cast<std::uint8_t>(ka[j] + kb[j]);
      out.add(k, pa * pb);
    }
  }
  return out;
}

namespace {

HIndex single(int var, int n) {
  HIndex k{};
  k[var - 2] = static_cast<std::uint8_t>(n);
  return k;
}

void check_var(int var, int m) {
  if (var < 2 || var > m) throw DomainError("series variable must be one of h_2..h_m");
}

bool scalar_valued(const MPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_scalar()) return false;
  }
  return true;
}

}  // namespace

HSeries power_expand(const Rational& alpha, std::span<const MPoly> base, int var, int order) {
  if (base.empty()) throw DomainError("empty base polynomial");
  const int m = base[0].dim();
  const Ring ring = base[0].ring();
  check_var(var, m);
  MPoly one = MPoly::constant(m, ring, GaussianRational(1));
  if (!(base[0] == one)) throw DomainError("base constant term must be 1");
  for (const auto& g : base) {
    if (g.dim() != m || !(g.ring() == ring)) throw MismatchError("base coefficients disagree on dimension or ring");
    if (!scalar_valued(g)) throw DomainError("base coefficients must be scalar-valued");
  }
  // f = g^alpha with g_0 = 1:  n f_n = sum_{i=1}^{n} ((alpha + 1) i - n) g_i f_{n-i}.
  std::vector<MPoly> f;
  f.reserve(static_cast<std::size_t>(order) + 1);
  f.push_back(one);
  const int top = static_cast<int>(base.size()) - 1;
  for (int n = 1; n <= order; ++n) {
    MPoly fn(m, ring);
    for (int i = 1; i <= std::min(n, top); ++i) {
      if (base[i].is_zero() || f[n - i].is_zero()) continue;
      Rational w = (alpha + 1) * i - n;
      if (sgn(w) == 0) continue;
      fn += (base[i] * f[n - i]) * GaussianRational(w);
    }
    fn *= GaussianRational(Rational(1, n));
    f.push_back(std::move(fn));
  }
  HSeries out(m, ring, order);
  for (int n = 0; n <= order; ++n) out.add(single(var, n), f[n]);
  return out;
}

HSeries binomial_expand(const Rational& alpha, const MPoly& c1, const MPoly& c2, int var, int order) {
  std::vector<MPoly> base{MPoly::constant(c1.dim(), c1.ring(), GaussianRational(1)), c1, c2};
  return power_expand(alpha, base, var, order);
}

HSeries exp_series(const MPoly& p, int var, int order) {
  check_var(var, p.dim());
  HSeries out(p.dim(), p.ring(), order);
  MPoly power = MPoly::constant(p.dim(), p.ring(), GaussianRational(1));
  for (int n = 0; n <= order; ++n) {
    if (n > 0) power = power * p;
    out.add(single(var, n), power * GaussianRational(1 / factorial(n)));
  }
  return out;
}

HSeries geometric_series(const MPoly& p, int var, int order) {
  check_var(var, p.dim());
  HSeries out(p.dim(), p.ring(), order);
  MPoly power = MPoly::constant(p.dim(), p.ring(), GaussianRational(1));
  for (int n = 0; n <= order; ++n) {
    if (n > 0) power = power * p;
    out.add(single(var, n), power);
  }
  return out;
}

HSeries lift_step(const HSeries& source, GfKind kind, int order) {
  if (source.order() < order) throw DomainError("source series is truncated below the requested order");
  const int m = source.dim() + 1;
  if (m > kMaxDim) throw DomainError("dimension exceeds the supported maximum");
  if (kind == GfKind::monogenic && !source.ring().is_clifford()) {
    throw MismatchError("monogenic lift requires a Clifford-valued series");
  }
  const Ring ring = source.ring().is_clifford() ? Ring::clifford(m) : source.ring();
  const Rational alpha = kind == GfKind::harmonic ? make_rational(2 - m, 2) : make_rational(-m, 2);

  MPoly c1 = MPoly::variable(m, ring, m) * GaussianRational(-2);
  MPoly c2 = MPoly::norm_squared(m, ring);

  // Expansion of d_m^{alpha - s}, one per total degree s of the source index.
  std::vector<HSeries> kernels;
  kernels.reserve(static_cast<std::size_t>(order) + 1);
  for (int s = 0; s <= order; ++s) kernels.push_back(binomial_expand(alpha - s, c1, c2, m, order - s));

  HSeries lifted(m, ring, order);
  for (const auto& [k, p] : source.terms()) {
    const int s = index_degree(k);
    if (s > order) continue;
    MPoly coeff = p.embed(m);
    for (const auto& [kn, q] : kernels[s].terms()) {
      HIndex idx = k;
      idx[m - 2] = kn[m - 2];
      lifted.add(idx, q * coeff);
    }
  }
  if (kind == GfKind::harmonic) return lifted;

  // Left factor 1 + (x e_m) h_m.
  HSeries prefactor = HSeries::one(m, ring, order);
  MPoly x_em = MPoly::clifford_vector(m).right_mul(Multivector::basis(m, Blade{1u << (m - 1)}));
  prefactor.add(single(m, 1), x_em);
  return series_mul(prefactor, lifted);
}

}  // namespace gtbasis
