#pragma once

#include <array>
#include <cstdint>

namespace walkcanon {

// splitmix64 (Steele/Lea/Vigna).  One 64-bit state word advanced by the
// golden-gamma constant; the output finalizer is a bijection on uint64.
struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Seed for sample `index` of a run keyed by `base`.  Equals the splitmix64
// output at state base + (index+1)*gamma; distinct states through a bijective
// finalizer, so seeds are pairwise distinct for any fixed base.
constexpr std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 s{base + index * 0x9e3779b97f4a7c15ULL};
  return s.next();
}

// xoshiro256** 1.0 (Blackman/Vigna), seeded from splitmix64 as its authors
// recommend.  Chosen over std::mt19937_64 because the full draw pipeline
// (including the [0,1) mapping below) is pinned here, independent of any
// standard-library distribution implementation.
class Xoshiro256ss {
 public:
  explicit constexpr Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
  }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0,1): top 53 bits scaled by 2^-53.
  constexpr double next_unit() { return (next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace walkcanon
