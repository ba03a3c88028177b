#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/fp.hpp"
#include "core/mono.hpp"

namespace sforge {

/// Ambient polynomial ring data: the field and the number of variables.
/// Variables are always x0..x_{nvars-1}; subrings are re-indexed rings.
struct Ring {
  Fp F;
  int nvars = 0;

  Ring() = default;
  Ring(const Fp& field, int n) : F(field), nvars(n) {}
  bool operator==(const Ring& o) const { return F == o.F && nvars == o.nvars; }
  bool operator!=(const Ring& o) const { return !(*this == o); }
};

/// A polynomial stored as parallel coefficient/exponent arrays, terms kept
/// sorted strictly descending under the order it was normalized with.
/// Polynomials are value types; operations never mutate their inputs.
class Poly {
public:
  Poly() = default;
  explicit Poly(int nvars) : nv_(nvars) {}

  int nvars() const { return nv_; }
  int nterms() const { return int(cf_.size()); }
  bool zero() const { return cf_.empty(); }

  uint32_t coeff(int i) const { return cf_[i]; }
  const Exp* mono(int i) const { return ex_.data() + size_t(i) * nv_; }
  uint32_t lc() const { return cf_.front(); }
  const Exp* lm() const { return ex_.data(); }

  /// Total degree of term i / of the leading term / max over terms.
  int term_deg(int i) const { return mono_deg(mono(i), nv_); }
  int deg() const;
  bool homogeneous() const;

  /// Append a term; caller must normalize() before using the poly.
  void push_term(uint32_t c, const Exp* m);
  void push_term(uint32_t c, const Mono& m) { push_term(c, m.data()); }

  /// Sort descending under ord, merge equal monomials, drop zeros.
  void normalize(const Fp& F, const Order& ord);

  /// Re-sort an already-normalized poly under another order.
  Poly resorted(const Order& ord) const;

  const std::vector<uint32_t>& coeffs() const { return cf_; }
  const std::vector<Exp>& exps() const { return ex_; }

private:
  int nv_ = 0;
  std::vector<uint32_t> cf_;
  std::vector<Exp> ex_;
  friend Poly poly_from_raw(int, std::vector<uint32_t>, std::vector<Exp>);
};

Poly poly_from_raw(int nv, std::vector<uint32_t> cf, std::vector<Exp> ex);

// ---- arithmetic (all inputs normalized under `ord`; results likewise) ----

Poly poly_add(const Fp& F, const Order& ord, const Poly& a, const Poly& b);
Poly poly_sub(const Fp& F, const Order& ord, const Poly& a, const Poly& b);
Poly poly_neg(const Fp& F, const Poly& a);
Poly poly_scale(const Fp& F, const Poly& a, uint32_t c);
/// a * c*x^m (order preserved).
Poly poly_mul_term(const Fp& F, const Poly& a, uint32_t c, const Exp* m);
Poly poly_mul(const Fp& F, const Order& ord, const Poly& a, const Poly& b);
/// Make the leading coefficient 1.
Poly poly_monic(const Fp& F, const Poly& a);

/// Partial derivative d/dx_i.
Poly poly_derivative(const Fp& F, const Poly& a, int var);

/// Evaluate at a point (coords.size() == nvars).
uint32_t poly_eval(const Fp& F, const Poly& a, const std::vector<uint32_t>& coords);

/// Substitute x_i -> sum_j M[i][j] * y_j, mapping into a ring with
/// `nv_out` variables. M has nvars rows and nv_out columns.
Poly poly_compose_linear(const Fp& F, const Order& ord, const Poly& a,
                         const std::vector<std::vector<uint32_t>>& M, int nv_out);

/// Map variables by position: x_i -> x_{var_map[i]} in a ring with nv_out
/// variables; var_map[i] == -1 asserts the variable does not occur.
Poly poly_rename_vars(const Poly& a, const std::vector<int>& var_map, int nv_out,
                      const Fp& F, const Order& ord);

/// Monomial constructors.
Poly poly_one(const Fp& F, int nv);
Poly poly_var(int nv, int i);
Poly poly_const(const Fp& F, int nv, uint32_t c);

bool poly_equal(const Poly& a, const Poly& b);

}  // namespace sforge
