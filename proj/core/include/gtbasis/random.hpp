#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gtbasis {

/// SplitMix64 generator. split(stream) derives an independent child stream,
/// so checks seeded from one master seed do not depend on execution order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 mixer(state_ ^ (stream * 0xd1b54a32d192ed03ULL));
    return SplitMix64(mixer.next());
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform point in the closed unit ball of R^m (rejection sampling).
  std::vector<double> ball_point(int m) {
    std::vector<double> p(static_cast<std::size_t>(m));
    for (;;) {
      double r2 = 0.0;
      for (double& v : p) {
        v = uniform(-1.0, 1.0);
        r2 += v * v;
      }
      if (r2 <= 1.0) return p;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace gtbasis
