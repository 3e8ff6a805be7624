#pragma once

#include <cstdint>

namespace kerov {

// splitmix64 (Steele, Lea, Flood; the java.util.SplittableRandom mixer).
// Pure 64-bit integer pipeline, so trajectories are reproducible bit-for-bit
// across platforms. Samplers that need independent streams call split().
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., n-1}, rejection-sampled so the law is exact.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % n;
  }

  // Uniform signed integer in {-m, ..., m}.
  long long next_signed(long long m) {
    return static_cast<long long>(next_below(2 * static_cast<std::uint64_t>(m) + 1)) - m;
  }

  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }
};

inline constexpr const char* kRngAlgorithm = "splitmix64";

}  // namespace kerov
