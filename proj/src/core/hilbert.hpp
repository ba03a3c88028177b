// Hilbert series, Hilbert polynomials, and the numeric invariants derived
// from them (Krull dimension, degree, sectional genus).
//
// Everything here is exact integer arithmetic.  The Hilbert series of S/I
// is computed from the lead-monomial ideal of a grevlex Groebner basis via
// the standard pivot recursion
//
//     N(I) = N(I + (m)) + t^deg(m) * N(I : m)
//
// which is valid for every monomial m (it is the numerator-level shadow of
// the exact sequence 0 -> S/(I:m) -> S/I -> S/(I+(m)) -> 0).  Pivots are
// chosen Bigatti-style (most frequent variable, median exponent) so the
// recursion stays shallow on the lead ideals we actually meet.
#pragma once

#include <string>
#include <vector>

#include "core/groebner.hpp"
#include "core/mono.hpp"

namespace sforge {

// Dense polynomial in the formal series variable t, index = degree.
// Coefficients are exact signed 64-bit; all arithmetic overflow-checked.
using TPoly = std::vector<long long>;

TPoly tpoly_add(const TPoly& a, const TPoly& b);
TPoly tpoly_sub(const TPoly& a, const TPoly& b);
TPoly tpoly_mul(const TPoly& a, const TPoly& b);
// Multiply by t^k.
TPoly tpoly_shift(const TPoly& a, int k);
// Drop trailing zero coefficients (canonical form; zero polynomial -> {}).
TPoly tpoly_trim(TPoly a);
bool tpoly_equal(const TPoly& a, const TPoly& b);
long long tpoly_eval1(const TPoly& a);        // a(1)
long long tpoly_deriv_eval1(const TPoly& a);  // a'(1)
std::string tpoly_to_string(const TPoly& a);  // e.g. "1 + 3t - t^2"

// Exact binomial coefficient C(n, k) for n >= 0 (0 when n < k).
long long binom(long long n, int k);
// The binomial POLYNOMIAL C(x + m, m) = (x+1)(x+2)...(x+m)/m! evaluated at
// an arbitrary integer x (may be negative; the result is still an integer).
// This is what Hilbert-polynomial evaluation needs at small arguments.
long long binom_poly(long long x, int m);

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/I where I is
// the monomial ideal generated by `gens` (need not be minimal).
TPoly hilbert_numerator(std::vector<Mono> gens, int nvars);

// Hilbert series data of a graded quotient S/I plus derived invariants.
struct HilbertData {
  int nvars = 0;        // number of ambient ring variables
  TPoly numerator;      // N(t): series = N(t)/(1-t)^nvars
  TPoly reduced;        // Q(t) with Q(1) != 0: series = Q(t)/(1-t)^krull_dim
  int krull_dim = 0;    // Krull dimension of S/I (-1 for the zero ring)
  int proj_dim = -1;    // krull_dim - 1: dimension n of the projective scheme
  int codim = 0;        // (nvars - 1) - proj_dim for nonempty schemes
  long long degree = 0; // Q(1) = chi_n; 0 for the empty scheme
  // Hilbert-polynomial coefficients chi_0..chi_n in the binomial basis
  //   P(m) = sum_i chi_i * C(m + i - 1, i),
  // computed exactly as chi_k = (Delta^k P)(0) with backward differences
  // (the basis satisfies Delta C(m+i-1, i) = C(m+i-2, i-1), so evaluation
  // at 0 kills every term above k).  Empty when the scheme is empty.
  std::vector<long long> chi;
  // Sectional genus pi = 1 - chi_{n-1} (equivalently 1 - Q(1) + Q'(1)).
  // Defined (genus_defined) only when proj_dim >= 1.
  long long sectional_genus = 0;
  bool genus_defined = false;

  // Hilbert FUNCTION values dim (S/I)_d for d = 0..dmax, by expanding the
  // series exactly.
  std::vector<long long> function_values(int dmax) const;
  // Hilbert POLYNOMIAL evaluated at d (as a polynomial, valid for all d).
  long long polynomial_value(long long d) const;
  // Smallest d0 such that function and polynomial agree for all d >= d0.
  int polynomial_agreement_from() const;
  // "(1 + 3t)/(1-t)^2" rendering of the reduced form.
  std::string series_string() const;
};

// Hilbert data of S/I from a grevlex Groebner basis of I.
HilbertData hilbert_data(const Ideal& I, const Caps& caps = Caps{});
// Same, but directly from a list of lead monomials.
HilbertData hilbert_data_from_leads(std::vector<Mono> leads, int nvars);

}  // namespace sforge
