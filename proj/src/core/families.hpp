#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "core/geometry.hpp"

namespace sforge {

/// Rational normal curve of degree d in P^d: 2-minors of the 2 x d Hankel
/// matrix; parametrized by (s:t) -> (s^d : s^{d-1}t : ... : t^d).
Variety family_rnc(const Fp& F, int d);

/// Rational normal scroll S(a_1,...,a_n) in P^{sum a_i + n - 1}: 2-minors of
/// the concatenated Hankel blocks. Block i is parametrized as
/// x^(i)_j = u_i * s^(A-j) * t^j with A = max a_i, which gives every
/// component the common degree A+1 and satisfies all cross-block minors.
Variety family_scroll(const Fp& F, const std::vector<int>& a);

/// Veronese embedding of P^n by degree-d monomials (canonical grevlex order
/// of the monomials). Ideal obtained by graph elimination.
Variety family_veronese(const Fp& F, int n, int d, const Caps& caps = {});

/// Image of the plane curve V(C) in P^2 under the linear system Q_0..Q_m
/// (graph elimination); the parametrization carries C as its constraint.
Variety family_plane_curve_embed(const Fp& F, const Poly& C, const std::vector<Poly>& sys,
                                 const std::string& label, const Caps& caps = {});

/// Trigonal genus-3 curve of degree 7 in P^4: a random smooth plane quartic
/// (Jacobian criterion checked) mapped by the five conics through one of
/// its points. Deterministic under the seed.
Variety family_trigonal_g3(const Fp& F, uint64_t seed, const Caps& caps = {});

/// Elliptic normal curve of degree 3k in P^{3k-1}: a random smooth plane
/// cubic mapped by all degree-k monomials. Deterministic under the seed.
Variety family_elliptic(const Fp& F, int k, uint64_t seed, const Caps& caps = {});

/// Genus-2 curve of degree 6 in P^4: a random plane quartic with exactly one
/// node, mapped by the conics through the node (which resolve it).
Variety family_genus2(const Fp& F, uint64_t seed, const Caps& caps = {});

/// Pluecker embedding of the Grassmannian of lines G(1, n-1) in
/// P^{C(n,2)-1}: 4-Pfaffians of the generic n x n skew matrix;
/// parametrized by the 2-minors of a generic 2 x n matrix.
Variety family_grassmann_pfaffian(const Fp& F, int n);

/// Determinantal variety of the rows x cols catalecticant (Hankel) matrix
/// M[i][j] = x_{i+j} in P^{rows+cols-2}: the ideal of maximal minors
/// (requires rows <= cols). This is the (rows-1)-secant variety of the
/// rational normal curve, and is parametrized as such.
Variety family_catalecticant(const Fp& F, int rows, int cols);

/// Where a projection center comes from.
enum class CenterRecipe {
  OnVariety,  // a sampled point of X (inner projection)
  OnSecant,   // a general point of S^2(X) off X
  Outer,      // a random ambient point off X (and off S^2(X) when testable)
};

/// Projection of `base` from a seeded center point. The image variety keeps
/// a parametrization (the base components transported through the frame).
Variety family_project(const Variety& base, CenterRecipe recipe, uint64_t seed,
                       const Caps& caps = {});

/// The characteristic-2 example: over F_2, the 2-minors of the 3 x 3 matrix
/// with rows (x0,x1,x2), (x3,x4,x5), (x6^2,x7^2,x8^2) in P^8. Throws
/// DomainError unless F is F_2. No parametrization (F_2 has too few points
/// to sample usefully); all downstream computation is by elimination.
Variety family_char2(const Fp& F);

/// The 3 x 3 matrix of family_char2 and its determinant (a quartic): the
/// 2-secant ideal equals the principal ideal it generates.
Poly char2_secant_determinant(const Fp& F);

/// Laplace-expansion determinant of a small square matrix of polynomials.
Poly poly_det(const Fp& F, const Order& ord, const std::vector<std::vector<Poly>>& M);

// --------------------------------------------------------------------------
// Pinned regression corpus.

/// Expected values a corpus entry pins down; unset members are not checked.
struct ExpectedFragments {
  std::optional<long long> secant_degree;   // deg S^q(X)
  std::optional<int> secant_dim;            // dim S^q(X)
  std::optional<int> secant_codim;          // e = codim S^q(X)
  std::optional<long long> sectional_genus; // pi(S^q(X))
  std::optional<bool> minimal;              // minimal-degree q-secant verdict
  std::optional<bool> almost_minimal;
  std::optional<bool> del_pezzo;
  std::optional<int> pei_s;                 // stabilization number at a general point
  std::optional<long long> pei_deg_pi;      // projection degree
  std::optional<long long> dim_forms_q1;    // dim (I_{S^q})_{q+1}
  std::vector<std::tuple<int, int, long long>> betti_pins;  // (p, row j, value)
};

struct CorpusEntry {
  std::string name;
  int q = 2;
  uint32_t prime = 0;       // 0 = run at the harness default prime
  uint64_t seed = 1;        // default seed for seeded constructions
  bool dual_route = false;  // small enough to cross-check interp vs elim
  bool stretch = false;     // opt-in only: exceeds desk-scale caps
  // Preferred secant construction: 0 = join elimination, otherwise the
  // interpolation route searched up to this degree.
  int interp_dmax = 0;
  std::function<Variety(const Fp&, uint64_t seed)> build;
  ExpectedFragments expect;
};

/// Every worked example the library pins as a regression: rational normal
/// curves, scrolls, Veroneses, the trigonal and genus-2 plane models, the
/// elliptic sextic, the Grassmannian G(1,4), the projected scroll S(3,4),
/// and the characteristic-2 determinantal example.
const std::vector<CorpusEntry>& corpus();

}  // namespace sforge
