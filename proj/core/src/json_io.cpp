#include "gtbasis/json_io.hpp"

#include <climits>

#include "gtbasis/errors.hpp"

namespace gtbasis {

using nlohmann::json;

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

namespace {

Rational rational_from(const json& num, const json& den) {
  mpz_class d = integer_from_json(den);
  if (d == 0) throw std::invalid_argument("zero denominator in JSON");
  Rational q(integer_from_json(num), d);
  q.canonicalize();
  return q;
}

void put_coeff(json& t, const GaussianRational& c, bool with_imag) {
  t["num"] = integer_to_json(c.re.get_num());
  t["den"] = integer_to_json(c.re.get_den());
  if (with_imag) {
    t["inum"] = integer_to_json(c.im.get_num());
    t["iden"] = integer_to_json(c.im.get_den());
  }
}

GaussianRational get_coeff(const json& t) {
  GaussianRational c(rational_from(t.at("num"), t.value("den", json(1))));
  if (t.contains("inum")) c.im = rational_from(t.at("inum"), t.value("iden", json(1)));
  return c;
}

}  // namespace

json to_json(const Multivector& mv) {
  bool complex = false;
  for (const auto& [b, c] : mv.terms()) complex = complex || !c.is_real();
  json terms = json::array();
  for (const auto& [b, c] : mv.terms()) {
    json t;
    t["blade"] = b.mask;
    put_coeff(t, c, complex);
    terms.push_back(std::move(t));
  }
  return {{"dim", mv.dim()}, {"terms", std::move(terms)}};
}

Multivector multivector_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<Multivector::Term> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(Blade{t.at("blade").get<std::uint32_t>()}, get_coeff(t));
  return Multivector::from_terms(dim, std::move(terms));
}

json to_json(const MultivectorF& mv) {
  json terms = json::array();
  for (const auto& [b, c] : mv.terms()) terms.push_back({{"blade", b.mask}, {"re", c.real()}, {"im", c.imag()}});
  return {{"dim", mv.dim()}, {"terms", std::move(terms)}};
}

json to_json(const MPoly& p) {
  json terms = json::array();
  const bool cliff = p.ring().is_clifford();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> exps(e.begin(), e.begin() + p.dim());
    for (const auto& [b, k] : c.terms()) {
      json t;
      t["exp"] = exps;
      if (cliff) t["blade"] = b.mask;
      put_coeff(t, k, true);
      terms.push_back(std::move(t));
    }
  }
  return {{"m", p.dim()}, {"ring", cliff ? "clifford" : "gaussian"}, {"terms", std::move(terms)}};
}

MPoly mpoly_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  const std::string ring_name = j.at("ring").get<std::string>();
  Ring ring;
  if (ring_name == "gaussian") {
    ring = Ring::gaussian();
  } else if (ring_name == "clifford") {
    ring = Ring::clifford(j.value("cdim", m));
  } else {
    throw std::invalid_argument("unknown ring '" + ring_name + "'");
  }
  MPoly p(m, ring);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != m) throw std::invalid_argument("exponent vector length must equal m");
    Exponent e{};
    for (int i = 0; i < m; ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
      e[i] = static_cast<std::uint8_t>(exps[i]);
    }
    const Blade b{ring.is_clifford() ? t.value("blade", 0u) : 0u};
    p.add_term(e, Multivector::basis(ring.cdim, b, get_coeff(t)));
  }
  return p;
}

json to_json(const HSeries& s) {
  json terms = json::array();
  for (const auto& [k, p] : s.terms()) {
    std::vector<int> idx(k.begin(), k.begin() + (s.dim() - 1));
    terms.push_back({{"k", idx}, {"poly", to_json(p)}});
  }
  return {{"m", s.dim()},
          {"order", s.order()},
          {"ring", s.ring().is_clifford() ? "clifford" : "gaussian"},
          {"terms", std::move(terms)}};
}

HSeries hseries_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  const int order = j.at("order").get<int>();
  std::vector<std::pair<HIndex, MPoly>> entries;
  Ring ring = j.value("ring", std::string("gaussian")) == "clifford" ? Ring::clifford(m) : Ring::gaussian();
  for (const auto& t : j.at("terms")) {
    const auto idx = t.at("k").get<std::vector<int>>();
    if (static_cast<int>(idx.size()) != m - 1) throw std::invalid_argument("series index length must equal m-1");
    HIndex k{};
    for (int i = 0; i < m - 1; ++i) {
      if (idx[i] < 0 || idx[i] > 255) throw std::invalid_argument("series index out of range");
      k[i] = static_cast<std::uint8_t>(idx[i]);
    }
    MPoly p = mpoly_from_json(t.at("poly"));
    ring = p.ring();
    entries.emplace_back(k, std::move(p));
  }
  HSeries s(m, ring, order);
  for (const auto& [k, p] : entries) s.add(k, p);
  return s;
}

json to_json(const PiScaled& v) {
  return {{"q_num", integer_to_json(v.q.get_num())},
          {"q_den", integer_to_json(v.q.get_den())},
          {"sqrt_pi_pow", v.s}};
}

PiScaled pi_scaled_from_json(const json& j) {
  return {rational_from(j.at("q_num"), j.at("q_den")), j.at("sqrt_pi_pow").get<int>()};
}

}  // namespace gtbasis
