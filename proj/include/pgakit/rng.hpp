#pragma once

#include <cstdint>

namespace pga {

/// splitmix64: tiny, seed-stable generator. Used everywhere randomness is
/// needed so that reports and verification runs are reproducible across
/// platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// A child stream that is independent of later draws from this one.
  Rng split() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

private:
  std::uint64_t state_;
};

}  // namespace pga
