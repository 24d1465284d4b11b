#pragma once

// Real Clifford algebra R_{0,m}: generators e_1..e_m with e_j^2 = -1 and
// e_i e_j = -e_j e_i for i != j. Blades are stored as bitmasks (bit j-1 set
// when e_j is present) in canonical ascending order.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/scalar.hpp"

namespace gtbasis {

inline constexpr int kMaxDim = 8;

struct Blade {
  std::uint32_t mask = 0;

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool is_scalar() const { return mask == 0; }
  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

/// Blade e_{g1 g2 ...} from 1-based generator indices, e.g. blade_of({1, 2}) is e_12.
constexpr Blade blade_of(std::initializer_list<int> generators) {
  std::uint32_t m = 0;
  for (int g : generators) m |= (1u << (g - 1));
  return Blade{m};
}

struct BladeProduct {
  int sign;
  Blade blade;
};

/// e_a e_b = sign * e_{a xor b}. Throws DomainError if either mask uses a
/// generator beyond `dim`.
BladeProduct blade_product(Blade a, Blade b, int dim);

/// Sign (-1)^{r(r+1)/2} of the Clifford conjugate on a grade-r blade.
constexpr int conjugation_sign(int grade) {
  return ((grade * (grade + 1) / 2) % 2 == 0) ? 1 : -1;
}

namespace detail {
inline bool scalar_is_zero(const GaussianRational& s) { return s.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& s) { return s == 0.0; }
inline bool scalar_is_zero(double s) { return s == 0.0; }
inline std::complex<double> scalar_to_float(const GaussianRational& s) { return s.to_complex(); }
inline std::complex<double> scalar_to_float(const std::complex<double>& s) { return s; }
}  // namespace detail

/// Element of R_{0,dim} (or its complexification) with coefficients of type S.
/// Exact mode uses S = GaussianRational, evaluation mode std::complex<double>.
template <class S>
class BasicMultivector {
 public:
  using Scalar = S;
  using Term = std::pair<Blade, S>;

  explicit BasicMultivector(int dim = 0) : dim_(check_dim(dim)) {}

  static BasicMultivector scalar(int dim, S value) {
    return basis(dim, Blade{0}, std::move(value));
  }

  static BasicMultivector basis(int dim, Blade blade, S coeff = S(1)) {
    BasicMultivector mv(dim);
    mv.check_blade(blade);
    if (!detail::scalar_is_zero(coeff)) mv.terms_.emplace_back(blade, std::move(coeff));
    return mv;
  }

  /// Vector v_1 e_1 + ... + v_n e_n.
  static BasicMultivector vector(int dim, std::span<const S> components) {
    if (static_cast<int>(components.size()) > dim) throw MismatchError("vector has more components than dim");
    BasicMultivector mv(dim);
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (!detail::scalar_is_zero(components[j])) {
        mv.terms_.emplace_back(Blade{1u << j}, components[j]);
      }
    }
    return mv;
  }

  /// Build from arbitrary (blade, coeff) pairs; duplicates are summed.
  static BasicMultivector from_terms(int dim, std::vector<Term> terms) {
    BasicMultivector mv(dim);
    for (const auto& t : terms) mv.check_blade(t.first);
    mv.terms_ = std::move(terms);
    mv.normalize();
    return mv;
  }

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_scalar()); }

  S coeff(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade key) { return t.first < key; });
    if (it != terms_.end() && it->first == b) return it->second;
    return S(0);
  }

  S scalar_part() const { return coeff(Blade{0}); }

  BasicMultivector conjugate() const {
    BasicMultivector out = *this;
    for (auto& [blade, c] : out.terms_) {
      if (conjugation_sign(blade.grade()) < 0) c = -c;
    }
    return out;
  }

  /// Same element viewed in R_{0,new_dim}, new_dim >= dim.
  BasicMultivector embed(int new_dim) const {
    if (new_dim < dim_) throw MismatchError("cannot embed multivector into a smaller algebra");
    BasicMultivector out = *this;
    out.dim_ = check_dim(new_dim);
    return out;
  }

  /// Apply f to every coefficient (e.g. complex conjugation of i).
  template <class F>
  BasicMultivector map_coefficients(F&& f) const {
    BasicMultivector out(dim_);
    for (const auto& [blade, c] : terms_) {
      S v = f(c);
      if (!detail::scalar_is_zero(v)) out.terms_.emplace_back(blade, std::move(v));
    }
    return out;
  }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    require_same_dim(o);
    merge(o, false);
    return *this;
  }

  BasicMultivector& operator-=(const BasicMultivector& o) {
    require_same_dim(o);
    merge(o, true);
    return *this;
  }

  BasicMultivector& operator*=(const S& s) {
    if (detail::scalar_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator-(BasicMultivector a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend BasicMultivector operator*(BasicMultivector a, const S& s) { return a *= s; }
  friend BasicMultivector operator*(const S& s, BasicMultivector a) { return a *= s; }

  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    a.require_same_dim(b);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        BladeProduct p = blade_product(ba, bb, a.dim_);
        S c = ca * cb;
        if (p.sign < 0) c = -c;
        acc.emplace_back(p.blade, std::move(c));
      }
    }
    BasicMultivector out(a.dim_);
    out.terms_ = std::move(acc);
    out.normalize();
    return out;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  static int check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) throw DomainError("Clifford dimension out of range");
    return dim;
  }

  void check_blade(Blade b) const {
    if (dim_ < 32 && (b.mask >> dim_) != 0) throw DomainError("blade mask exceeds algebra dimension");
  }

  void require_same_dim(const BasicMultivector& o) const {
    if (dim_ != o.dim_) throw MismatchError("multivector dimension mismatch");
  }

  void merge(const BasicMultivector& o, bool negate) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, negate ? S(-j->second) : j->second);
        ++j;
      } else {
        S c = std::move(i->second);
        if (negate) c -= j->second; else c += j->second;
        if (!detail::scalar_is_zero(c)) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  void normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return detail::scalar_is_zero(t.second); });
    terms_ = std::move(out);
  }

  int dim_;
  std::vector<Term> terms_;
};

using Multivector = BasicMultivector<GaussianRational>;
using MultivectorF = BasicMultivector<std::complex<double>>;

template <class S>
BasicMultivector<S> mv_mul(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return a * b;
}

template <class S>
BasicMultivector<S> mv_conjugate(const BasicMultivector<S>& a) {
  return a.conjugate();
}

template <class S>
S scalar_part(const BasicMultivector<S>& a) {
  return a.scalar_part();
}

MultivectorF to_float(const Multivector& a);

/// Blade name such as "e13"; the scalar blade renders as "1".
std::string blade_name(Blade b);

}  // namespace gtbasis
