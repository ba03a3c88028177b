#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace sforge {

/// Exponent type. Total degrees in this engine are capped well below 2^16.
using Exp = uint16_t;

/// A monomial is a dense exponent vector of length nvars. Free functions
/// below operate on raw pointers so polynomial storage can stay flat.
using Mono = std::vector<Exp>;

inline int mono_deg(const Exp* a, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += a[i];
  return d;
}
inline int mono_deg(const Mono& a) { return mono_deg(a.data(), int(a.size())); }

inline bool mono_divides(const Exp* a, const Exp* b, int n) {  // a | b
  for (int i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void mono_mul(const Exp* a, const Exp* b, Exp* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = Exp(a[i] + b[i]);
}

/// out = b / a, requires a | b.
inline void mono_div(const Exp* a, const Exp* b, Exp* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = Exp(b[i] - a[i]);
}

inline void mono_lcm(const Exp* a, const Exp* b, Exp* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

inline bool mono_coprime(const Exp* a, const Exp* b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline bool mono_equal(const Exp* a, const Exp* b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Monomial orders. All are total, multiplicative and have 1 as minimum.
///   Grevlex     graded reverse lexicographic on all variables
///   Lex         pure lexicographic, x0 > x1 > ...
///   Elim(k)     eliminates the FIRST k variables: grevlex on that block
///               first, grevlex on the remaining block as tiebreak
///   VarFirst    compares the x0-degree first, grevlex on the rest as
///               tiebreak; this is Elim(1) and is the order whose leading
///               coefficients realize partial elimination ideals
struct Order {
  enum Kind : uint8_t { Grevlex, Lex, Elim, VarFirst };
  Kind kind = Grevlex;
  int block = 0;  // Elim: size of the front block

  static Order grevlex() { return {Grevlex, 0}; }
  static Order lex() { return {Lex, 0}; }
  static Order elim(int front) { return {Elim, front}; }
  static Order var_first() { return {VarFirst, 1}; }

  /// Three-way compare: +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Exp* a, const Exp* b, int n) const;
  bool less(const Exp* a, const Exp* b, int n) const { return cmp(a, b, n) < 0; }
  bool greater(const Exp* a, const Exp* b, int n) const { return cmp(a, b, n) > 0; }

  bool operator==(const Order& o) const { return kind == o.kind && block == o.block; }
  std::string name() const;
};

/// All monomials of total degree d in n variables, listed descending under
/// `ord`. The listing is the canonical basis used for graded slices and
/// interpolation matrices.
std::vector<Mono> monomials_of_degree(int n, int d, const Order& ord);

/// Number of monomials of degree d in n variables: C(d+n-1, n-1).
long long count_monomials(int n, int d);

}  // namespace sforge
