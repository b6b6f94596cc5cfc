// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace powerlaw {

// Generator contract, fixed across releases: "xoshiro256++/splitmix64-blocks:v1".
//
// A 64-bit master seed is expanded by SplitMix64. Stream k of a master seed
// takes the 4-word block [4k, 4k+4) of the master SplitMix64 output sequence
// as its xoshiro256++ state, so distinct streams never share state words and
// replicate streams can be reconstructed in isolation.
inline constexpr const char* kGeneratorId = "xoshiro256++/splitmix64-blocks:v1";

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed, std::uint64_t stream = 0) {
    // SplitMix64 advances its state by a fixed increment per output, so the
    // state at block k is reachable in O(1).
    SplitMix64 expander(seed + 4 * stream * 0x9E3779B97F4A7C15ULL);
    for (auto& word : s_) word = expander.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is absorbing
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_;
};

}  // namespace powerlaw
