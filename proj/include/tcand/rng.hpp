#pragma once

#include <cstdint>

namespace tcand {

// Deterministic splittable RNG with a splitmix64 core. Pure integer state
// transitions, so sequences are identical across platforms and runs.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    return finalize(z);
  }

  // Uniform integer in [0, bound); bound >= 1. Rejection sampling keeps the
  // distribution exact.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Independent child stream labeled by tag. Children with distinct tags, and
  // children of distinct parents, get decorrelated states.
  Rng derive(uint64_t tag) const {
    return Rng(finalize(state_ + 0x9e3779b97f4a7c15ull * (tag + 0x632be59bd9b4e019ull)));
  }

private:
  static uint64_t finalize(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace tcand
