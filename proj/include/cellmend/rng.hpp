#pragma once

#include <cstdint>

// Deterministic, portable pseudo-random primitives.
//
// All stochastic code in this library draws from SplitMix64 streams derived
// from a (seed, stream id) pair.  Giving every logical unit of work (a sample
// to generate, a synthetic point to emit) its own stream makes results
// independent of evaluation order, which is what lets parallel code produce
// bit-identical output to the serial path.
//
// std::mt19937 + std::normal_distribution are avoided deliberately: the
// standard does not pin down distribution algorithms, so their output can
// differ between standard-library implementations.

namespace cellmend::rng {

// SplitMix64 finalizer (public-domain construction). Full-avalanche 64->64 mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Uniform double strictly inside (0, 1): (x >> 11) has 53 random bits;
  // adding 0.5 before scaling keeps both endpoints unreachable.
  constexpr double next_unit() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n) via 128-bit multiply (Lemire's trick without
  // rejection; bias is O(n / 2^64), irrelevant at our scales and fully
  // deterministic).
  constexpr std::uint64_t next_below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Standard normal via Box-Muller (cosine branch only, so one draw consumes
  // exactly two uniforms and streams stay position-independent).
  double next_gaussian() noexcept;

 private:
  std::uint64_t state_;
};

// Independent child stream for (seed, id).  Distinct ids give decorrelated
// streams; the double mix keeps related seeds (1, 2, 3, ...) apart.
constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t id) noexcept {
  return SplitMix64(mix64(seed ^ 0x6A09E667F3BCC909ull) ^
                    mix64(id ^ 0xBB67AE8584CAA73Bull));
}

// Fixed id prefixes carving the stream-id space per pipeline stage, so stages
// sharing one master seed never collide.
inline constexpr std::uint64_t kStreamGenerate = 0x0100000000000000ull;
inline constexpr std::uint64_t kStreamSplit = 0x0200000000000000ull;
inline constexpr std::uint64_t kStreamResample = 0x0300000000000000ull;
inline constexpr std::uint64_t kStreamUndersample = 0x0400000000000000ull;

}  // namespace cellmend::rng
