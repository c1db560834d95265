#pragma once

#include <cstdint>

#include "grassblow/rational.hpp"

namespace grassblow {

// Deterministic splitmix64 stream; identical across platforms and runs.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi].
    long in_range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Test-point rationals: numerators in [-9, 9], denominators in [1, 9].
    Rat small_rational() { return rat(in_range(-9, 9), in_range(1, 9)); }

    Rat small_nonzero() {
        long num = in_range(1, 9);
        if (next() & 1) num = -num;
        return rat(num, in_range(1, 9));
    }

  private:
    std::uint64_t state_;
};

}  // namespace grassblow
