#pragma once

// Verification suites behind `gtbasis verify`. Every check is deterministic
// given the seed; checks run in parallel but the report is sorted by
// (name, params) so its JSON is byte-identical across runs.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtbasis/harmonics.hpp"
#include "gtbasis/random.hpp"

namespace gtbasis {

struct VerifyOptions {
  std::string suite = "all";  // all | pde | ortho | extract | gf | lemmas
  int m_max = 3;
  int deg_max = 3;
  int order = 3;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: GTBASIS_THREADS or hardware concurrency
  bool timings = false;
};

struct CheckResult {
  std::string suite;
  std::string name;
  nlohmann::json params;
  bool passed = false;
  nlohmann::json witness;  // first counterexample; null when passed
  double seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json(bool with_timings = false) const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or non-positive ranges.
VerifyReport run_verify(const VerifyOptions& options);

/// Number of worker threads: `requested` if non-zero, else GTBASIS_THREADS,
/// else the hardware concurrency; the environment variable caps all of them.
unsigned thread_budget(unsigned requested);

/// Truncation order used when comparing closed forms with partial sums.
inline constexpr int kGfSeriesOrder = 30;
/// Sample points per closed-form comparison.
inline constexpr int kGfSamplePoints = 20;

struct GfSample {
  std::vector<double> x;
  std::vector<double> h;
};

/// x uniform in the unit ball, h uniform in half of the conservative box. The
/// exponential base leaves h_2 unbounded; it is sampled as if its base radius were 1.
GfSample sample_half_box(SplitMix64& rng, int m);

}  // namespace gtbasis
