#pragma once

#include <cstdint>

namespace hamrep {

/// Deterministic splittable PRNG (splitmix64 core). Identical seeds yield
/// identical streams on every platform, which keeps randomized checks and
/// JSON reports reproducible. split() derives an independent child stream,
/// so per-sample generators do not depend on evaluation order.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Child generator for logical stream `stream`; does not advance *this.
  SplitRng split(std::uint64_t stream) const {
    SplitRng mix(state_ ^ (0x5851f42d4c957f2dULL * (stream + 1)));
    mix.next();
    return SplitRng(mix.next());
  }

  /// Uniform draw from the inclusive range [lo, hi] (unbiased by rejection).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace hamrep
