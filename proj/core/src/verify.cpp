#include "gtbasis/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "gtbasis/ballint.hpp"
#include "gtbasis/gegenbauer.hpp"
#include "gtbasis/json_io.hpp"
#include "gtbasis/monogenics.hpp"

namespace gtbasis {

using nlohmann::json;

namespace {

struct Task {
  std::string suite;
  std::string name;
  json params;
  std::function<json()> run;  // null json on success, witness otherwise
};

const char* norm_name(Normalization n) { return n == Normalization::factorial ? "factorial" : "plain"; }
const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

constexpr Normalization kNorms[] = {Normalization::factorial, Normalization::plain};
constexpr Sign kSigns[] = {Sign::plus, Sign::minus};

HIndex to_hindex(const std::vector<int>& k) {
  HIndex out{};
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = static_cast<std::uint8_t>(k[i]);
  return out;
}

json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

double max_component_diff(const MultivectorF& a, const MultivectorF& b) {
  MultivectorF d = a - b;
  double worst = 0.0;
  for (const auto& [blade, c] : d.terms()) worst = std::max(worst, std::abs(c));
  return worst;
}

// ---- pde -------------------------------------------------------------------

json check_laplacian(int m, int deg, Normalization norm) {
  for (const auto& idx : enumerate_harm_indices(m, deg, norm)) {
    MPoly p = harm_basis(idx);
    if (!laplacian(p).is_zero() || !is_homogeneous(p, idx.degree())) {
      return {{"k", idx.k}, {"sign", sign_name(idx.sign)}, {"poly", p.to_text()}};
    }
  }
  return nullptr;
}

json check_dirac(int m, int deg, Normalization norm) {
  for (const auto& idx : enumerate_mon_indices(m, deg, norm)) {
    MPoly p = mon_basis(idx);
    if (!dirac_apply(p).is_zero() || !is_homogeneous(p, idx.degree())) {
      return {{"k", idx.k}, {"poly", p.to_text()}};
    }
  }
  return nullptr;
}

MPoly random_clifford_poly(SplitMix64& rng, int m, int deg) {
  MPoly p(m, Ring::clifford(m));
  const int terms = static_cast<int>(rng.uniform_int(1, 8));
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    int budget = static_cast<int>(rng.uniform_int(0, deg));
    for (int j = 0; j < m && budget > 0; ++j) {
      int a = static_cast<int>(rng.uniform_int(0, budget));
      e[j] = static_cast<std::uint8_t>(a);
      budget -= a;
    }
    const Blade b{static_cast<std::uint32_t>(rng.uniform_int(0, (1L << m) - 1))};
    const Rational c = make_rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 7));
    p.add_term(e, Multivector::basis(m, b, GaussianRational(c)));
  }
  return p;
}

json check_factorization(int m, int deg, int count, SplitMix64 rng) {
  for (int i = 0; i < count; ++i) {
    MPoly p = random_clifford_poly(rng, m, deg);
    if (!(laplacian(p) == -dirac_apply(dirac_apply(p)))) return {{"sample", i}, {"poly", p.to_text()}};
  }
  return nullptr;
}

// ---- ortho -----------------------------------------------------------------

json check_harm_orthogonality(int m, int deg) {
  const auto indices = enumerate_harm_indices(m, deg, Normalization::factorial);
  std::vector<MPoly> basis;
  basis.reserve(indices.size());
  for (const auto& idx : indices) basis.push_back(harm_basis(idx));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    GaussianPiScaled self = inner_harm(basis[a], basis[a]);
    if (!self.q.is_real() || sgn(self.q.re) <= 0) {
      return {{"k", indices[a].k}, {"sign", sign_name(indices[a].sign)}, {"reason", "self product not positive"}};
    }
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!inner_harm(basis[a], basis[b]).is_zero()) {
        return {{"k", indices[a].k}, {"sign", sign_name(indices[a].sign)},
                {"l", indices[b].k}, {"sign_l", sign_name(indices[b].sign)}};
      }
    }
  }
  return nullptr;
}

json check_mon_orthogonality(int m, int deg) {
  const auto indices = enumerate_mon_indices(m, deg, Normalization::factorial);
  std::vector<MPoly> basis;
  basis.reserve(indices.size());
  for (const auto& idx : indices) basis.push_back(mon_basis(idx));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (sgn(inner_mon(basis[a], basis[a]).q) <= 0) {
      return {{"k", indices[a].k}, {"reason", "self product not positive"}};
    }
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!inner_mon(basis[a], basis[b]).is_zero()) return {{"k", indices[a].k}, {"l", indices[b].k}};
    }
  }
  return nullptr;
}

// ---- extract ---------------------------------------------------------------

json check_harm_extraction(int m, int order, Sign sign, Normalization norm) {
  const HSeries s = gf_harm_series(m, order, sign, norm);
  for (auto idx : enumerate_harm_indices(m, order, norm)) {
    idx.sign = sign;
    if (!(s.coefficient(to_hindex(idx.k)) == harm_basis(idx))) return {{"k", idx.k}};
  }
  return nullptr;
}

json check_mon_extraction(int m, int order, Normalization norm) {
  const HSeries s = gf_mon_series(m, order, norm);
  for (const auto& idx : enumerate_mon_indices(m, order, norm)) {
    if (!(s.coefficient(to_hindex(idx.k)) == mon_basis(idx))) return {{"k", idx.k}};
  }
  return nullptr;
}

// ---- gf --------------------------------------------------------------------

json check_harm_closed_vs_series(int m, Sign sign, Normalization norm, SplitMix64 rng) {
  const HSeries s = gf_harm_series(m, kGfSeriesOrder, sign, norm);
  for (int i = 0; i < kGfSamplePoints; ++i) {
    GfSample pt = sample_half_box(rng, m);
    const std::complex<double> closed = gf_harm_closed(m, pt.x, pt.h, sign, norm);
    const std::complex<double> partial = s.evaluate(pt.x, pt.h).scalar_part();
    if (!(std::abs(closed - partial) <= 1e-8)) {
      return {{"x", pt.x}, {"h", pt.h}, {"closed", complex_json(closed)}, {"series", complex_json(partial)}};
    }
  }
  return nullptr;
}

json check_mon_closed_vs_series(int m, Normalization norm, SplitMix64 rng) {
  const HSeries s = gf_mon_series(m, kGfSeriesOrder, norm);
  for (int i = 0; i < kGfSamplePoints; ++i) {
    GfSample pt = sample_half_box(rng, m);
    const MultivectorF closed = gf_mon_closed(m, pt.x, pt.h, norm);
    const MultivectorF partial = s.evaluate(pt.x, pt.h);
    const double diff = max_component_diff(closed, partial);
    if (!(diff <= 1e-8)) return {{"x", pt.x}, {"h", pt.h}, {"max_component_diff", diff}};
  }
  return nullptr;
}

json check_harm_recurrence(int m, Sign sign, SplitMix64 rng) {
  for (int i = 0; i < kGfSamplePoints; ++i) {
    GfSample pt = sample_half_box(rng, m);
    const std::complex<double> full = gf_harm_closed(m, pt.x, pt.h, sign, Normalization::factorial);
    const double d = detail::kernel_d(m, pt.x, pt.h.back());
    std::vector<double> hs(pt.h.begin(), pt.h.end() - 1);
    for (double& v : hs) v /= d;
    std::vector<double> xs(pt.x.begin(), pt.x.end() - 1);
    const std::complex<double> rhs = std::pow(d, 1.0 - 0.5 * m) *
                                     gf_harm_closed(m - 1, xs, hs, sign, Normalization::factorial);
    if (!(std::abs(full - rhs) <= 1e-12 * std::max(1.0, std::abs(full)))) {
      return {{"x", pt.x}, {"h", pt.h}, {"lhs", complex_json(full)}, {"rhs", complex_json(rhs)}};
    }
  }
  return nullptr;
}

json check_mon_recurrence(int m, SplitMix64 rng) {
  for (int i = 0; i < kGfSamplePoints; ++i) {
    GfSample pt = sample_half_box(rng, m);
    const MultivectorF full = gf_mon_closed(m, pt.x, pt.h, Normalization::factorial);
    const double hm = pt.h.back();
    const double d = detail::kernel_d(m, pt.x, hm);
    std::vector<double> hs(pt.h.begin(), pt.h.end() - 1);
    for (double& v : hs) v /= d;
    std::vector<double> xs(pt.x.begin(), pt.x.end() - 1);
    std::vector<std::complex<double>> xc(pt.x.begin(), pt.x.end());
    const MultivectorF pre = MultivectorF::scalar(m, 1.0) +
                             MultivectorF::vector(m, xc) * MultivectorF::basis(m, Blade{1u << (m - 1)}, hm);
    const MultivectorF rhs =
        pre * gf_mon_closed(m - 1, xs, hs, Normalization::factorial).embed(m) * std::complex<double>(std::pow(d, -0.5 * m));
    double scale = 1.0;
    for (const auto& [b, c] : full.terms()) scale = std::max(scale, std::abs(c));
    if (!(max_component_diff(full, rhs) <= 1e-12 * scale)) return {{"x", pt.x}, {"h", pt.h}};
  }
  return nullptr;
}

json check_explicit_h3(Sign sign, SplitMix64 rng) {
  for (int i = 0; i < kGfSamplePoints; ++i) {
    GfSample pt = sample_half_box(rng, 3);
    const auto generic = gf_harm_closed(3, pt.x, pt.h, sign, Normalization::factorial);
    const auto explicit_form = harm3_closed_form(pt.x, pt.h, sign);
    if (!(std::abs(generic - explicit_form) <= 1e-12 * std::max(1.0, std::abs(generic)))) {
      return {{"x", pt.x}, {"h", pt.h}};
    }
  }
  return nullptr;
}

json check_explicit_m3(SplitMix64 rng) {
  for (int i = 0; i < kGfSamplePoints; ++i) {
    GfSample pt = sample_half_box(rng, 3);
    const MultivectorF generic = gf_mon_closed(3, pt.x, pt.h, Normalization::factorial);
    const MultivectorF explicit_form = mon3_closed_form(pt.x, pt.h);
    double scale = 1.0;
    for (const auto& [b, c] : generic.terms()) scale = std::max(scale, std::abs(c));
    if (!(max_component_diff(generic, explicit_form) <= 1e-12 * scale)) return {{"x", pt.x}, {"h", pt.h}};
  }
  return nullptr;
}

// ---- generating functions of the building blocks ----------------------

json check_gegenbauer(const Rational& nu, int kmax) {
  // Second route: expand (1 - 2 t h + h^2)^{-nu} with t = x_1.
  const Ring ring = Ring::gaussian();
  const HSeries gf = binomial_expand(-nu, MPoly::variable(2, ring, 1) * GaussianRational(-2),
                                     MPoly::constant(2, ring, GaussianRational(1)), 2, kmax);
  for (int k = 0; k <= kmax; ++k) {
    const GegenbauerPoly c = gegenbauer_poly(nu, k);
    MPoly expected(2, ring);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      Exponent e{};
      e[0] = static_cast<std::uint8_t>(i);
      expected.add_term(e, Multivector::scalar(0, GaussianRational(c.coeffs[i])));
    }
    HIndex idx{};
    idx[0] = static_cast<std::uint8_t>(k);
    if (!(gf.coefficient(idx) == expected)) return {{"k", k}};
  }
  return nullptr;
}

json check_gf_embedding_f(int m, int j, int kmax) {
  const Ring ring = Ring::gaussian();
  const HSeries s = binomial_expand(-make_rational(m + 2 * j - 2, 2), MPoly::variable(m, ring, m) * GaussianRational(-2),
                                    MPoly::norm_squared(m, ring), m, kmax);
  for (int k = 0; k <= kmax; ++k) {
    HIndex idx{};
    idx[m - 2] = static_cast<std::uint8_t>(k);
    if (!(s.coefficient(idx) == embedding_F(m, j, k))) return {{"k", k}};
  }
  return nullptr;
}

json check_gf_embedding_x(int m, int j, int kmax) {
  const Ring ring = Ring::clifford(m);
  HSeries kernel = binomial_expand(-make_rational(m + 2 * j, 2), MPoly::variable(m, ring, m) * GaussianRational(-2),
                                   MPoly::norm_squared(m, ring), m, kmax);
  HSeries pre = HSeries::one(m, ring, kmax);
  HIndex one{};
  one[m - 2] = 1;
  pre.add(one, MPoly::clifford_vector(m).right_mul(Multivector::basis(m, Blade{1u << (m - 1)})));
  const HSeries s = series_mul(pre, kernel);
  for (int k = 0; k <= kmax; ++k) {
    HIndex idx{};
    idx[m - 2] = static_cast<std::uint8_t>(k);
    if (!(s.coefficient(idx) == embedding_X(m, j, k))) return {{"k", k}};
  }
  return nullptr;
}

/// (1 - conj(z) h) (1 - 2 x_1 h + h^2 |x|^2)^{-1} against sum_k z^k h^k, exactly.
json check_plain_base(bool monogenic, int order) {
  const Ring ring = monogenic ? Ring::clifford(2) : Ring::gaussian();
  const MPoly z = monogenic ? mon_base(2, 1, Normalization::plain) : harm_base(2, 1, Sign::plus, Normalization::plain);
  const MPoly zbar = monogenic ? z.clifford_conjugate() : z.conj_i();
  HSeries numerator = HSeries::one(2, ring, order);
  HIndex one{};
  one[0] = 1;
  numerator.add(one, -zbar);
  const HSeries denom = binomial_expand(Rational(-1), MPoly::variable(2, ring, 1) * GaussianRational(-2),
                                        MPoly::norm_squared(2, ring), 2, order);
  const HSeries closed = series_mul(numerator, denom);
  const HSeries geometric = geometric_series(z, 2, order);
  if (!(closed == geometric)) {
    for (int k = 0; k <= order; ++k) {
      HIndex idx{};
      idx[0] = static_cast<std::uint8_t>(k);
      if (!(closed.coefficient(idx) == geometric.coefficient(idx))) return {{"k", k}};
    }
    return {{"reason", "series differ"}};
  }
  return nullptr;
}

std::vector<Task> build_tasks(const VerifyOptions& o, const std::vector<std::string>& suites) {
  std::vector<Task> tasks;
  auto wants = [&](const std::string& s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };
  SplitMix64 master(o.seed);
  std::uint64_t stream = 0;
  auto next_rng = [&]() { return master.split(++stream); };

  if (wants("pde")) {
    for (int m = 2; m <= o.m_max; ++m) {
      for (Normalization n : kNorms) {
        tasks.push_back({"pde", "harmonic_laplacian", {{"m", m}, {"deg", o.deg_max}, {"norm", norm_name(n)}},
                         [=] { return check_laplacian(m, o.deg_max, n); }});
        tasks.push_back({"pde", "monogenic_dirac", {{"m", m}, {"deg", o.deg_max}, {"norm", norm_name(n)}},
                         [=] { return check_dirac(m, o.deg_max, n); }});
      }
      SplitMix64 rng = next_rng();
      tasks.push_back({"pde", "dirac_factorization", {{"m", m}, {"deg", o.deg_max}, {"samples", 25}},
                       [=] { return check_factorization(m, o.deg_max, 25, rng); }});
    }
  }
  if (wants("ortho")) {
    for (int m = 2; m <= o.m_max; ++m) {
      tasks.push_back({"ortho", "harmonic_orthogonality", {{"m", m}, {"deg", o.deg_max}},
                       [=] { return check_harm_orthogonality(m, o.deg_max); }});
      tasks.push_back({"ortho", "monogenic_orthogonality", {{"m", m}, {"deg", o.deg_max}},
                       [=] { return check_mon_orthogonality(m, o.deg_max); }});
    }
  }
  if (wants("extract")) {
    for (int m = 2; m <= o.m_max; ++m) {
      for (Normalization n : kNorms) {
        for (Sign s : kSigns) {
          tasks.push_back({"extract", "harmonic_extraction",
                           {{"m", m}, {"order", o.order}, {"sign", sign_name(s)}, {"norm", norm_name(n)}},
                           [=] { return check_harm_extraction(m, o.order, s, n); }});
        }
        tasks.push_back({"extract", "monogenic_extraction", {{"m", m}, {"order", o.order}, {"norm", norm_name(n)}},
                         [=] { return check_mon_extraction(m, o.order, n); }});
      }
    }
  }
  if (wants("gf")) {
    // Exact order-30 series are only expanded up to m = 3.
    for (int m = 2; m <= std::min(o.m_max, 3); ++m) {
      for (Normalization n : kNorms) {
        for (Sign s : kSigns) {
          SplitMix64 rng = next_rng();
          tasks.push_back({"gf", "harmonic_closed_vs_series",
                           {{"m", m}, {"order", kGfSeriesOrder}, {"sign", sign_name(s)}, {"norm", norm_name(n)}},
                           [=] { return check_harm_closed_vs_series(m, s, n, rng); }});
        }
        SplitMix64 rng = next_rng();
        tasks.push_back({"gf", "monogenic_closed_vs_series",
                         {{"m", m}, {"order", kGfSeriesOrder}, {"norm", norm_name(n)}},
                         [=] { return check_mon_closed_vs_series(m, n, rng); }});
      }
    }
    for (int m = 3; m <= std::max(o.m_max, 3); ++m) {
      for (Sign s : kSigns) {
        SplitMix64 rng = next_rng();
        tasks.push_back({"gf", "harmonic_recurrence", {{"m", m}, {"sign", sign_name(s)}},
                         [=] { return check_harm_recurrence(m, s, rng); }});
      }
      SplitMix64 rng = next_rng();
      tasks.push_back({"gf", "monogenic_recurrence", {{"m", m}}, [=] { return check_mon_recurrence(m, rng); }});
    }
    for (Sign s : kSigns) {
      SplitMix64 rng = next_rng();
      tasks.push_back({"gf", "explicit_form_h3", {{"sign", sign_name(s)}}, [=] { return check_explicit_h3(s, rng); }});
    }
    SplitMix64 rng = next_rng();
    tasks.push_back({"gf", "explicit_form_m3", json::object(), [=] { return check_explicit_m3(rng); }});
  }
  if (wants("lemmas")) {
    for (int twice_nu = 1; twice_nu <= 5; ++twice_nu) {
      const Rational nu = make_rational(twice_nu, 2);
      tasks.push_back({"lemmas", "gegenbauer_generating_function", {{"nu", nu.get_str()}, {"k_max", 12}},
                       [=] { return check_gegenbauer(nu, 12); }});
    }
    for (int m = 3; m <= std::max(o.m_max, 3); ++m) {
      for (int j = 0; j <= 3; ++j) {
        tasks.push_back({"lemmas", "gf_embedding_F", {{"m", m}, {"j", j}, {"k_max", 8}},
                         [=] { return check_gf_embedding_f(m, j, 8); }});
        tasks.push_back({"lemmas", "gf_embedding_X", {{"m", m}, {"j", j}, {"k_max", 8}},
                         [=] { return check_gf_embedding_x(m, j, 8); }});
      }
    }
    tasks.push_back({"lemmas", "plain_base_geometric", {{"kind", "harm"}, {"order", 12}},
                     [] { return check_plain_base(false, 12); }});
    tasks.push_back({"lemmas", "plain_base_geometric", {{"kind", "mon"}, {"order", 12}},
                     [] { return check_plain_base(true, 12); }});
  }
  return tasks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pde", "ortho", "extract", "gf", "lemmas"};
  return names;
}

unsigned thread_budget(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GTBASIS_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

GfSample sample_half_box(SplitMix64& rng, int m) {
  GfSample s;
  s.x = rng.ball_point(m);
  const DomainBox box = DomainBox::conservative(m, Normalization::plain);
  for (double b : box.bounds) s.h.push_back(rng.uniform(-0.5 * b, 0.5 * b));
  return s;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

json VerifyReport::to_json(bool with_timings) const {
  json list = json::array();
  for (const auto& c : checks) {
    json entry{{"suite", c.suite}, {"name", c.name}, {"params", c.params}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) entry["witness"] = c.witness;
    if (with_timings) entry["seconds"] = c.seconds;
    list.push_back(std::move(entry));
  }
  return {{"seed", seed}, {"suites", suites}, {"passed", passed()}, {"checks", std::move(list)}};
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.m_max < 2 || options.m_max > kMaxDim) throw std::invalid_argument("--m-max must lie in [2, 8]");
  if (options.deg_max < 0 || options.order < 0) throw std::invalid_argument("degrees and orders must be non-negative");
  std::vector<std::string> suites;
  if (options.suite == "all") {
    suites = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), options.suite) != suite_names().end()) {
    suites = {options.suite};
  } else {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }

  std::vector<Task> tasks = build_tasks(options, suites);
  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      CheckResult r{tasks[i].suite, tasks[i].name, tasks[i].params, false, nullptr, 0.0};
      try {
        r.witness = tasks[i].run();
        r.passed = r.witness.is_null();
      } catch (const std::exception& e) {
        r.witness = {{"exception", e.what()}};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  const unsigned n = std::min<unsigned>(thread_budget(options.threads), static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params.dump() < b.params.dump();
  });
  return {options.seed, suites, std::move(results)};
}

}  // namespace gtbasis
