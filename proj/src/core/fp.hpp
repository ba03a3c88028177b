#pragma once

#include <cstdint>

#include "core/errors.hpp"

namespace sforge {

/// Arithmetic in the prime field F_p for a 32-bit prime p.
/// Elements are canonical residues in [0, p). Products are reduced with a
/// precomputed Barrett constant so no division appears in inner loops.
class Fp {
public:
  Fp() : p_(0), m_(0) {}
  explicit Fp(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }
  uint32_t neg(uint32_t a) const { return a ? p_ - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const { return reduce(uint64_t(a) * b); }

  /// Reduce any 64-bit value mod p (Barrett; one conditional correction).
  uint32_t reduce(uint64_t x) const {
    uint64_t q = uint64_t((static_cast<unsigned __int128>(x) * m_) >> 64);
    uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return uint32_t(r);
  }

  uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return uint32_t(r);
  }

  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  /// a/b with b != 0.
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  bool operator==(const Fp& o) const { return p_ == o.p_; }

  static bool is_prime(uint32_t n);

private:
  uint32_t p_;
  uint64_t m_;  // floor(2^64 / p)
};

}  // namespace sforge
