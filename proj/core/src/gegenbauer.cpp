#include "gtbasis/gegenbauer.hpp"

#include "gtbasis/errors.hpp"

namespace gtbasis {

namespace {

void check_args(const Rational& nu, int k) {
  if (sgn(nu) <= 0) throw DomainError("Gegenbauer parameter nu must be positive");
  if (k < 0) throw DomainError("Gegenbauer degree must be non-negative");
}

template <class T>
T recurrence(const Rational& nu, int k, const T& t, auto&& to_t) {
  T prev(1);
  if (k == 0) return prev;
  T cur = to_t(2 * nu) * t;
  for (int n = 2; n <= k; ++n) {
    T next = (to_t(2 * (n + nu - 1)) * t * cur - to_t(n + 2 * nu - 2) * prev) / T(n);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Rational GegenbauerPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double GegenbauerPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

GegenbauerPoly gegenbauer_poly(const Rational& nu, int k) {
  check_args(nu, k);
  std::vector<Rational> prev{Rational(1)};
  std::vector<Rational> cur;
  if (k == 0) return {nu, 0, prev};
  cur = {Rational(0), Rational(2 * nu)};
  for (int n = 2; n <= k; ++n) {
    std::vector<Rational> next(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational a = 2 * (n + nu - 1);
    Rational b = n + 2 * nu - 2;
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += a * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
    for (auto& c : next) c /= n;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {nu, k, cur};
}

Rational gegenbauer_eval(const Rational& nu, int k, const Rational& t) {
  check_args(nu, k);
  return recurrence<Rational>(nu, k, t, [](const Rational& q) { return Rational(q); });
}

double gegenbauer_eval(const Rational& nu, int k, double t) {
  check_args(nu, k);
  return recurrence<double>(nu, k, t, [](const Rational& q) { return q.get_d(); });
}

}  // namespace gtbasis
