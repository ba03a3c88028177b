#include "core/fp.hpp"

#include <string>

namespace sforge {

Fp::Fp(uint32_t p) : p_(p) {
  if (p < 2 || !is_prime(p))
    throw DomainError("field characteristic must be prime, got " + std::to_string(p));
  // floor(2^64 / p) without 128-bit division; the correction only fires for
  // p = 2, the one prime dividing 2^64.
  m_ = (~uint64_t(0)) / p;
  uint64_t rem = (~uint64_t(0)) % p;
  if (rem + 1 == p) m_ += 1;
}

bool Fp::is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

uint32_t Fp::inv(uint32_t a) const {
  if (a == 0) throw DomainError("division by zero in F_p");
  // Extended Euclid on (a, p).
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return uint32_t(t);
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = reduce(acc * base);
    base = reduce(base * base);
    e >>= 1;
  }
  return uint32_t(acc);
}

}  // namespace sforge
