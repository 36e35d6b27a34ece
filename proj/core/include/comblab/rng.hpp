#pragma once

#include <cstdint>
#include <limits>

namespace comblab {

// splitmix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** (Blackman and Vigna). Satisfies UniformRandomBitGenerator.
// Each walk gets its own generator seeded from hash(seed, stream index), so
// results do not depend on how walks are spread over threads.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      w = splitmix64_mix(x);
    }
  }

  static Rng for_stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return Rng(splitmix64_mix(seed) ^ splitmix64_mix(index ^ 0x6a09e667f3bcc909ULL));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
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

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Hands out random bits one or two at a time from 64-bit words.
class BitStream {
 public:
  explicit BitStream(Rng& rng) noexcept : rng_(rng) {}

  unsigned take(unsigned bits) noexcept {
    if (left_ < bits) {
      word_ = rng_();
      left_ = 64;
    }
    const auto out = static_cast<unsigned>(word_ & ((1u << bits) - 1));
    word_ >>= bits;
    left_ -= bits;
    return out;
  }

 private:
  Rng& rng_;
  std::uint64_t word_ = 0;
  unsigned left_ = 0;
};

}  // namespace comblab
