#pragma once

#include <cstdint>
#include <random>

#include "ppart/rational.hpp"

namespace ppart {

// Seeded generator with fully pinned-down derived draws, so reports are
// byte-identical across runs and platforms. std::mt19937_64's raw output
// sequence is specified by the standard; the distribution adaptors are not,
// hence the hand-rolled helpers below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), base_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n > 0, via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform rational a/b with a in [lo*den, hi*den], b = den.
  Rat rat(long long lo, long long hi, long long den) {
    return Rat(Int(range(lo * den, hi * den)), Int(den));
  }

  // Derive an independent stream; mixes the label through SplitMix64.
  Rng derive(std::uint64_t label) const {
    std::uint64_t z = base_ + 0x9E3779B97F4A7C15ULL * (label + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t base_ = 0;
};

}  // namespace ppart
