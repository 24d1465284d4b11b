// gtbasis: construct spherical harmonic / monogenic bases, evaluate and expand
// their generating functions, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments or index,
// 3 point outside the convergence domain, 4 singular kernel (d <= 0).

#include <charconv>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gtbasis/harmonics.hpp"
#include "gtbasis/json_io.hpp"
#include "gtbasis/monogenics.hpp"
#include "gtbasis/verify.hpp"

namespace {

using nlohmann::json;
using namespace gtbasis;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSingular = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::vector<double> parse_doubles(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& item : split_csv(s)) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string("cannot parse ") + what + " component '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_csv(s)) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("cannot parse index component '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw UsageError("--sign must be + or -");
}

Normalization parse_norm(const std::string& s) {
  if (s == "factorial") return Normalization::factorial;
  if (s == "plain") return Normalization::plain;
  throw UsageError("--norm must be factorial or plain");
}

/// Shortest round-trip representation, always with a decimal point.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(std::abs(z.imag())) + "i";
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + im;
}

std::string format_multivector(const MultivectorF& mv) {
  if (mv.is_zero()) return "0.0";
  std::string out;
  for (const auto& [blade, c] : mv.terms()) {
    std::string coeff;
    if (c.imag() == 0.0) {
      const bool negative = std::signbit(c.real());
      coeff = format_double(std::abs(c.real()));
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
    } else {
      coeff = "(" + format_complex(c) + ")";
      if (!out.empty()) out += " + ";
    }
    out += blade.is_scalar() ? coeff : coeff + "*" + blade_name(blade);
  }
  return out;
}

struct CommonArgs {
  std::string kind;
  int m = 0;
  std::string sign = "+";
  std::string norm = "factorial";
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--kind", a.kind, "harm or mon")->required()->check(CLI::IsMember({"harm", "mon"}));
  cmd->add_option("--m", a.m, "dimension m >= 2")->required();
  cmd->add_option("--sign", a.sign, "+ or - (harmonics only)");
  cmd->add_option("--norm", a.norm, "factorial or plain");
}

void check_dim(int m) {
  if (m < 2 || m > kMaxDim) throw UsageError("--m must lie in [2, " + std::to_string(kMaxDim) + "]");
}

int cmd_basis(const CommonArgs& a, const std::string& k_csv, const std::string& format) {
  check_dim(a.m);
  const std::vector<int> k = parse_ints(k_csv);
  if (static_cast<int>(k.size()) != a.m - 1) {
    throw UsageError("--k needs m-1 = " + std::to_string(a.m - 1) + " entries");
  }
  for (int v : k) {
    if (v < 0 || v > 255) throw UsageError("index entries must lie in [0, 255]");
  }
  const Normalization norm = parse_norm(a.norm);
  MPoly p = a.kind == "harm" ? harm_basis(BasisIndex{k, parse_sign(a.sign), norm}) : mon_basis(MonIndex{k, norm});
  if (format == "json") {
    std::cout << to_json(p).dump() << "\n";
  } else {
    std::cout << p.to_text() << "\n";
  }
  return 0;
}

int cmd_eval(const CommonArgs& a, const std::string& x_csv, const std::string& h_csv, bool unsafe,
             const std::string& format) {
  check_dim(a.m);
  const std::vector<double> x = parse_doubles(x_csv, "x");
  const std::vector<double> h = parse_doubles(h_csv, "h");
  if (static_cast<int>(x.size()) != a.m) throw UsageError("--x needs m components");
  if (static_cast<int>(h.size()) != a.m - 1) throw UsageError("--h needs m-1 components (h_2..h_m)");
  const Normalization norm = parse_norm(a.norm);
  const DomainPolicy policy = unsafe ? DomainPolicy::unsafe : DomainPolicy::enforce;
  if (a.kind == "harm") {
    const auto v = gf_harm_closed(a.m, x, h, parse_sign(a.sign), norm, policy);
    if (format == "json") {
      std::cout << json{{"re", v.real()}, {"im", v.imag()}}.dump() << "\n";
    } else {
      std::cout << format_complex(v) << "\n";
    }
  } else {
    const MultivectorF v = gf_mon_closed(a.m, x, h, norm, policy);
    if (format == "json") {
      std::cout << to_json(v).dump() << "\n";
    } else {
      std::cout << format_multivector(v) << "\n";
    }
  }
  return 0;
}

int cmd_series(const CommonArgs& a, int order) {
  check_dim(a.m);
  if (order < 0 || order > 255) throw UsageError("--order must lie in [0, 255]");
  const Normalization norm = parse_norm(a.norm);
  const HSeries s = a.kind == "harm" ? gf_harm_series(a.m, order, parse_sign(a.sign), norm)
                                     : gf_mon_series(a.m, order, norm);
  std::cout << to_json(s).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal bases of spherical harmonics and monogenics and their generating functions"};
  app.require_subcommand(1);

  CommonArgs basis_args;
  std::string basis_k;
  std::string basis_format = "text";
  CLI::App* basis = app.add_subcommand("basis", "print one basis polynomial");
  add_common(basis, basis_args);
  basis->add_option("--k", basis_k, "index k_2,...,k_m")->required();
  basis->add_option("--format", basis_format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* genfun = app.add_subcommand("genfun", "generating functions");
  genfun->require_subcommand(1);

  CommonArgs eval_args;
  std::string eval_x;
  std::string eval_h;
  bool eval_unsafe = false;
  std::string eval_format = "text";
  CLI::App* eval = genfun->add_subcommand("eval", "evaluate the closed form at (x, h)");
  eval->set_help_flag("--help", "Print this help message and exit");
  add_common(eval, eval_args);
  eval->add_option("--x", eval_x, "point x_1,...,x_m")->required();
  eval->add_option("--h", eval_h, "h_2,...,h_m")->required();
  eval->add_flag("--unsafe-domain", eval_unsafe, "skip the convergence-domain check");
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"text", "json"}));

  CommonArgs series_args;
  int series_order = 3;
  CLI::App* series = genfun->add_subcommand("series", "exact truncated series as JSON");
  add_common(series, series_args);
  series->add_option("--order", series_order, "total-degree truncation");

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites and print a JSON report");
  verify->add_option("--suite", vopt.suite)->check(CLI::IsMember({"all", "pde", "ortho", "extract", "gf", "lemmas"}));
  verify->add_option("--m-max", vopt.m_max);
  verify->add_option("--deg-max", vopt.deg_max);
  verify->add_option("--order", vopt.order);
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--threads", vopt.threads, "worker threads (capped by GTBASIS_THREADS)");
  verify->add_flag("--timings", vopt.timings, "include per-check wall time (breaks byte-identical output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadArgs;
  }

  try {
    if (*basis) return cmd_basis(basis_args, basis_k, basis_format);
    if (*eval) return cmd_eval(eval_args, eval_x, eval_h, eval_unsafe, eval_format);
    if (*series) return cmd_series(series_args, series_order);
    if (*verify) {
      const VerifyReport report = run_verify(vopt);
      std::cout << report.to_json(vopt.timings).dump(2) << "\n";
      return report.passed() ? 0 : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const SingularDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
