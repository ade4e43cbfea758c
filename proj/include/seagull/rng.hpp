#pragma once

#include <array>
#include <cstdint>

#include "seagull/field.hpp"

namespace seagull {

// xoshiro256++ with splitmix64 seeding. std::mt19937_64 would do, but the
// dealer draws tens of billions of field elements during the large protocol
// sweeps and uniform_int_distribution is not bit-reproducible across
// standard libraries; this generator is fast and produces identical streams
// on every platform, which the seeded golden tests rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      // splitmix64 step
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform over [0, p) by rejection on 61-bit draws; the only rejected
  // value is p itself, so the loop retries with probability 2^-61.
  FieldElement next_field() {
    for (;;) {
      std::uint64_t v = next_u64() & kFieldPrime;
      if (v != kFieldPrime) return FieldElement(v);
    }
  }

  // Uniform over [1, p).
  FieldElement next_nonzero_field() {
    for (;;) {
      FieldElement v = next_field();
      if (!v.is_zero()) return v;
    }
  }

  // Uniform over [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling over the smallest covering power-of-two mask.
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

  // Derive an independent generator; used to give each pipeline stage its
  // own stream so stages stay reproducible independently of one another.
  Rng fork(std::uint64_t label) { return Rng(next_u64() ^ label); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace seagull
