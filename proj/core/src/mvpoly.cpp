#include "gtbasis/mvpoly.hpp"

#include <sstream>
#include <vector>

namespace gtbasis {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto a : e) d += a;
  return d;
}

MPoly::MPoly(int m, Ring ring) : m_(m), ring_(ring) {
  if (m < 0 || m > kMaxDim) throw DomainError("polynomial dimension out of range");
  if (ring.is_clifford() && (ring.cdim < 0 || ring.cdim > kMaxDim)) {
    throw DomainError("Clifford dimension out of range");
  }
  if (!ring.is_clifford()) ring_.cdim = 0;
}

MPoly MPoly::constant(int m, Ring ring, const GaussianRational& c) {
  MPoly p(m, ring);
  p.add_term(Exponent{}, Multivector::scalar(p.ring_.cdim, c));
  return p;
}

MPoly MPoly::constant(int m, Ring ring, const Multivector& c) {
  MPoly p(m, ring);
  p.add_term(Exponent{}, c);
  return p;
}

MPoly MPoly::variable(int m, Ring ring, int j) {
  if (j < 1 || j > m) throw DomainError("variable index out of range");
  MPoly p(m, ring);
  Exponent e{};
  e[j - 1] = 1;
  p.add_term(e, p.ring_one());
  return p;
}

MPoly MPoly::monomial(int m, Ring ring, const Exponent& e, const Multivector& c) {
  MPoly p(m, ring);
  p.add_term(e, c);
  return p;
}

MPoly MPoly::norm_squared(int m, Ring ring, int upto) {
  if (upto < 0) upto = m;
  MPoly p(m, ring);
  for (int j = 0; j < upto; ++j) {
    Exponent e{};
    e[j] = 2;
    p.add_term(e, p.ring_one());
  }
  return p;
}

MPoly MPoly::clifford_vector(int m, int upto) {
  if (upto < 0) upto = m;
  MPoly p(m, Ring::clifford(m));
  for (int j = 0; j < upto; ++j) {
    Exponent e{};
    e[j] = 1;
    p.add_term(e, Multivector::basis(m, Blade{1u << j}));
  }
  return p;
}

std::optional<int> MPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Multivector MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return Multivector(ring_.cdim);
  return it->second;
}

Multivector MPoly::ring_one() const { return Multivector::scalar(ring_.cdim, GaussianRational(1)); }

void MPoly::add_term(const Exponent& e, const Multivector& c) {
  if (c.dim() != ring_.cdim) throw MismatchError("coefficient does not belong to the polynomial ring");
  if (!ring_.is_clifford() && !c.is_scalar()) throw MismatchError("Gaussian polynomial with non-scalar coefficient");
  for (int j = m_; j < kMaxDim; ++j) {
    if (e[j] != 0) throw DomainError("exponent uses a variable beyond the dimension");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::require_compatible(const MPoly& o) const {
  if (m_ != o.m_) throw MismatchError("polynomial dimension mismatch");
  if (!(ring_ == o.ring_)) throw MismatchError("polynomial ring mismatch");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_compatible(b);
  MPoly out(a.m_, a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{};
      for (int j = 0; j < kMaxDim; ++j) e[j] = static_cast<std::uint8_t>(ea[j] + eb[j]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::left_mul(const Multivector& c) const {
  MPoly out(m_, ring_);
  for (const auto& [e, k] : terms_) out.add_term(e, c * k);
  return out;
}

MPoly MPoly::right_mul(const Multivector& c) const {
  MPoly out(m_, ring_);
  for (const auto& [e, k] : terms_) out.add_term(e, k * c);
  return out;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = constant(m_, ring_, GaussianRational(1));
  MPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(int j) const {
  if (j < 1 || j > m_) throw DomainError("variable index out of range");
  MPoly out(m_, ring_);
  for (const auto& [e, c] : terms_) {
    if (e[j - 1] == 0) continue;
    Exponent d = e;
    d[j - 1] -= 1;
    out.add_term(d, c * GaussianRational(static_cast<long>(e[j - 1])));
  }
  return out;
}

MPoly MPoly::embed(int new_m) const {
  if (new_m < m_) throw MismatchError("cannot embed polynomial into fewer variables");
  Ring r = ring_.is_clifford() ? Ring::clifford(std::max(ring_.cdim, new_m)) : ring_;
  MPoly out(new_m, r);
  for (const auto& [e, c] : terms_) out.add_term(e, c.embed(r.cdim));
  return out;
}

MPoly MPoly::to_clifford(int cdim) const {
  if (ring_.is_clifford()) {
    if (ring_.cdim != cdim) throw MismatchError("Clifford polynomial of a different dimension");
    return *this;
  }
  MPoly out(m_, Ring::clifford(cdim));
  for (const auto& [e, c] : terms_) out.add_term(e, c.embed(cdim));
  return out;
}

MPoly MPoly::conj_i() const {
  MPoly out(m_, ring_);
  for (const auto& [e, c] : terms_) {
    out.add_term(e, c.map_coefficients([](const GaussianRational& z) { return z.conj(); }));
  }
  return out;
}

MPoly MPoly::real_part() const {
  MPoly out(m_, ring_);
  for (const auto& [e, c] : terms_) {
    out.add_term(e, c.map_coefficients([](const GaussianRational& z) { return GaussianRational(z.re); }));
  }
  return out;
}

MPoly MPoly::imag_part() const {
  MPoly out(m_, ring_);
  for (const auto& [e, c] : terms_) {
    out.add_term(e, c.map_coefficients([](const GaussianRational& z) { return GaussianRational(z.im); }));
  }
  return out;
}

MPoly MPoly::clifford_conjugate() const {
  MPoly out(m_, ring_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.conjugate());
  return out;
}

namespace {

template <class S, class MV>
MV eval_impl(const MPoly::TermMap& terms, int m, int cdim, std::span<const S> x) {
  if (static_cast<int>(x.size()) != m) throw MismatchError("point arity does not match polynomial dimension");
  // Powers table: pw[j][a] = x_j^a.
  std::array<std::vector<S>, kMaxDim> pw;
  for (const auto& [e, c] : terms) {
    for (int j = 0; j < m; ++j) {
      auto& row = pw[j];
      if (row.empty()) row.push_back(S(1));
      while (static_cast<int>(row.size()) <= e[j]) row.push_back(row.back() * x[j]);
    }
  }
  std::vector<typename MV::Term> acc;
  for (const auto& [e, c] : terms) {
    S mono(1);
    for (int j = 0; j < m; ++j) {
      if (e[j] != 0) mono *= pw[j][e[j]];
    }
    for (const auto& [blade, k] : c.terms()) {
      if constexpr (std::is_same_v<S, GaussianRational>) {
        acc.emplace_back(blade, k * mono);
      } else {
        acc.emplace_back(blade, k.to_complex() * std::complex<double>(mono));
      }
    }
  }
  return MV::from_terms(cdim, std::move(acc));
}

}  // namespace

Multivector MPoly::eval(std::span<const GaussianRational> x) const {
  return eval_impl<GaussianRational, Multivector>(terms_, m_, ring_.cdim, x);
}

MultivectorF MPoly::eval(std::span<const double> x) const {
  return eval_impl<double, MultivectorF>(terms_, m_, ring_.cdim, x);
}

std::string MPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, then lexicographic.
  std::vector<std::pair<const Exponent*, const Multivector*>> order;
  for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = total_degree(*a.first), db = total_degree(*b.first);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  for (const auto& [e, c] : order) {
    std::string mono;
    for (int j = 0; j < m_; ++j) {
      if ((*e)[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1);
      if ((*e)[j] > 1) mono += "^" + std::to_string((*e)[j]);
    }
    for (const auto& [blade, k] : c->terms()) {
      std::string coeff = to_string(k);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff = coeff.substr(1);
      std::string body;
      std::string tail = mono;
      if (!blade.is_scalar()) tail += (tail.empty() ? "" : "*") + blade_name(blade);
      if (tail.empty()) {
        body = coeff;
      } else if (coeff == "1") {
        body = tail;
      } else {
        body = coeff + "*" + tail;
      }
      if (first) {
        os << (negative ? "-" : "") << body;
      } else {
        os << (negative ? " - " : " + ") << body;
      }
      first = false;
    }
  }
  return os.str();
}

Multivector poly_eval(const MPoly& p, std::span<const GaussianRational> x) { return p.eval(x); }
MultivectorF poly_eval(const MPoly& p, std::span<const double> x) { return p.eval(x); }

MPoly laplacian(const MPoly& p) {
  MPoly out(p.dim(), p.ring());
  for (int j = 1; j <= p.dim(); ++j) out += p.derivative(j).derivative(j);
  return out;
}

MPoly dirac_apply(const MPoly& p) {
  if (!p.ring().is_clifford()) throw MismatchError("Dirac operator requires a Clifford-valued polynomial");
  if (p.ring().cdim < p.dim()) throw MismatchError("Clifford algebra smaller than the number of variables");
  MPoly out(p.dim(), p.ring());
  for (int j = 1; j <= p.dim(); ++j) {
    out += p.derivative(j).left_mul(Multivector::basis(p.ring().cdim, Blade{1u << (j - 1)}));
  }
  return out;
}

bool is_homogeneous(const MPoly& p, int d) {
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

}  // namespace gtbasis
