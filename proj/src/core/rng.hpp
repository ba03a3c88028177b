#pragma once

#include <cstdint>

#include "core/fp.hpp"

namespace sforge {

/// Deterministic splitmix64 stream. All randomized operations take an
/// explicit seed so runs are reproducible bit-for-bit across platforms.
class Rng {
public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by rejection (n > 0).
  uint64_t below(uint64_t n) {
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  uint32_t fp_elem(const Fp& F) { return uint32_t(below(F.p())); }
  uint32_t fp_nonzero(const Fp& F) { return uint32_t(1 + below(F.p() - 1)); }

  /// Derive an independent stream (for sub-tasks) without disturbing this one.
  Rng fork() { return Rng(next() ^ 0xa02bdbf7bb3c0a7ull); }

private:
  uint64_t s_;
};

}  // namespace sforge
