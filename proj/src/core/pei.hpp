// Partial elimination ideals (M. Green): project a variety from a point z
// and read the fibers off a single Groebner basis.  Move z to (1:0:...:0),
// compute the reduced basis of the ideal under the order that compares the
// x0-degree first, and collect, level by level, the leading x0-coefficients
// of basis elements.  The result is an ascending chain of ideals
//
//     K_0  ⊆  K_1  ⊆ ... ⊆  K_s   in the subring  S_z = k[x1..x_{n-1}],
//
// the i-th partial elimination ideal K_i being generated by the leading
// x0-coefficients of basis elements of x0-degree at most i.  K_0 is the
// ideal of the image X_z (ordinary elimination); V(K_i) is the locus of
// points whose fiber under the projection has length > i, together with
// the projectivized tangent cone at z; and the chain stabilizes at s to
// K_inf, which cuts out that projectivized tangent cone scheme-
// theoretically when z lies on the variety.  (When z is off the scheme,
// some defining equation survives at z and K_inf is the unit ideal.)
//
// From one chain this module derives the projection degree, a certified
// "simple tangent cone" test for secant varieties, and an exact inner-
// projection decomposition of Hilbert polynomials with its degree and
// sectional-genus consequences.  A brute-force degree-slice validator
// cross-checks the Groebner construction against the definition
// K_i = { coefficient of x0^i in f : f in I, deg_{x0} f <= i }.
#pragma once

#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/groebner.hpp"

namespace sforge {

/// The partial elimination ideal chain of a homogeneous ideal at a point.
/// Immutable once built; safe to share across threads.
struct PEIChain {
  Ideal base;                // the ideal in its original coordinates
  Point z;                   // the projection center (original coordinates)
  MatFp frame;               // invertible change of coordinates, column 0 = z
  MatFp frame_inv;
  Ideal framed;              // base pulled through the frame (z at (1:0:...:0))
  Ring subring;              // S_z = k[x1..x_{n-1}] re-indexed to n-1 variables
  std::vector<Ideal> chain;  // K_0 .. K_s, ascending by construction
  int s = 0;                 // stabilization: K_{s-1} strictly below K_s = K_{s+1} = ...
  int gb_x0_degree = 0;      // largest x0-degree in the Groebner basis (>= s)
  Ideal k_inf;               // = chain[s]
};

/// Build the chain at z, framing z to (1:0:...:0) deterministically.
/// The stabilization index is verified: levels whose ideal does not grow
/// are trimmed from the top, so K_{s-1} != K_s always holds (s = 0 when
/// every generator is free of the center, i.e. z is a cone vertex).
PEIChain pei_chain(const Ideal& I, const Point& z, const Caps& caps = {});

/// Same, but through a caller-supplied invertible frame whose column 0 is
/// the center.  Lets callers align later columns with chosen subspaces
/// (e.g. a tangent space) so that chain ideals land in adapted coordinates.
PEIChain pei_chain_framed(const Ideal& I, const MatFp& frame, const Caps& caps = {});

/// Image of a point under the projection from the chain's center: the
/// frame-inverse coordinates with the first entry dropped.  Throws
/// DomainError if x is proportional to the center.
Point pei_project_point(const PEIChain& ch, const Point& x);

/// Brute-force slice profile of the framed ideal in total degree D:
/// cnt[e] = dim { coefficient of x0^e in f : f in I_D, deg_{x0} f = e },
/// computed by one echelonization of the graded piece I_D with monomial
/// columns blocked by descending x0-exponent (no Groebner theory).  By
/// definition cnt[i] equals dim (K_i)_{D-i} minus nothing -- it IS the
/// definitional slice dimension of K_i in degree D-i.
std::vector<long long> pei_definition_profile(const Ideal& framed, int D, const Caps& caps = {});

/// dim { f in I_D : deg_{x0} f <= i } for the framed ideal (prefix sum of
/// the definition profile).
long long pei_tilde_dim(const Ideal& framed, int i, int D, const Caps& caps = {});

/// Cross-validate the Groebner chain against the definitional slices for
/// every level i and every slice degree d with i + d <= dmax (levels above
/// s are compared against K_s, which also re-checks stabilization).
/// Returns false on the first mismatch; `diag` (optional) receives the
/// mismatch report, or a note listing slices skipped over caps.
bool pei_chain_matches_definition(const PEIChain& ch, int dmax, const Caps& caps = {},
                                  std::string* diag = nullptr);

/// Degree of the projection map away from z: the least i such that V(K_i)
/// has smaller dimension than the image X_z (dimensions from Hilbert
/// polynomials).  Throws DomainError when the projection is not
/// generically finite (the image dimension already drops).
int projection_degree(const PEIChain& ch, const Caps& caps = {});
int projection_degree(const Ideal& I, const Point& z, const Caps& caps = {});

/// Verdict of the simple-tangent-cone test.  "Simple tangent cone" of a
/// q-secant variety at a general point z of X requires s = 1 together
/// with a prime K_inf; primality is certified by ideal equality with the
/// (q-1)-secant of the tangential projection of X at z -- the ideal the
/// tangent cone is the cone over -- which is prime as an elimination
/// ideal of a prime.  Equality failing with containment intact cannot
/// certify primality either way, so it reports Inconclusive, never true.
struct TangentConeReport {
  int s = 0;
  bool equal = false;      // K_inf == cone over the tangential (q-1)-secant
  bool contained = false;  // K_inf contained in that cone ideal
  enum class Verdict { True, False, Inconclusive } verdict = Verdict::Inconclusive;
  std::string detail;
};

/// Run the test for S^q(X) at z in X, with the secant ideal supplied by
/// the caller (any construction route).  Builds a frame adapted to the
/// tangent space at z, so the comparison is a literal ideal equality in
/// the subring.  Requires q >= 2 and z on X; a singular center (tangent
/// space larger than dim X) yields Inconclusive.
TangentConeReport simple_tangent_cone_check(const Variety& X, int q, const Point& z,
                                            const Ideal& secant_ideal, const Caps& caps = {});

/// Exact Hilbert-polynomial decomposition along an inner projection.
/// Writing s' for the projection degree and Z_i = Proj(S_z/K_i), the
/// x0-filtration of S/I telescopes to the polynomial identity
///
///   P_X(m) = sum_{i=0}^{s'-1} P_{X_z}(m-i) + sum_{i=s'}^{s-1} P_{Z_i}(m-i)
///            + P_C(m-s),
///
/// where C is the cone in P^{n-1} over V(K_inf) (for z on X this is the
/// projective tangent cone at z; for z off the scheme K_inf is the unit
/// ideal and the term vanishes).  Taking leading coefficients gives
///
///   deg X = s' * deg X_z + deg C,
///
/// and the next coefficient the sectional-genus identity
///
///   pi(X) = s' pi(X_z) - s' + C(s',2) deg X_z - sum_i deg Z_i
///           + pi(C) + s * deg C,
///
/// the middle sum over i = s'..s-1 counting only divisorial Z_i (those of
/// dimension dim X_z - 1; lower-dimensional levels contribute zero), and
/// the last two terms replaced by the constant 1 when the cone is empty.
/// All three identities are evaluated exactly and reported separately.
struct DecompositionReport {
  int s = 0;
  int s_prime = 0;              // projection degree
  long long deg_X = 0, deg_Xz = 0, deg_cone = 0;
  long long genus_X = 0, genus_Xz = 0, genus_cone = 0;
  std::vector<int> z_dims;      // dim Z_i, i = s'..s-1
  std::vector<long long> z_degs;  // deg Z_i, i = s'..s-1 (as computed, any dimension)
  bool center_on_scheme = false;
  bool cone_present = false;    // K_inf proper (z on the scheme)
  bool polynomial_identity = false;
  bool degree_identity = false;
  bool genus_identity = false;
  bool ok = false;              // all three
  std::string detail;           // per-side diagnostic on any failure
};

DecompositionReport hilbert_decomposition_check(const PEIChain& ch, const Caps& caps = {});
DecompositionReport hilbert_decomposition_check(const Ideal& I, const Point& z,
                                                const Caps& caps = {});

}  // namespace sforge
