#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/groebner.hpp"
#include "core/param.hpp"
#include "core/rng.hpp"

namespace sforge {

/// Homogeneous coordinates of a projective point; length = nvars of the
/// ambient ring, never all zero.
using Point = std::vector<uint32_t>;

/// A projective variety: its homogeneous ideal, an optional parametrization
/// for sampling, and a human-readable construction label.
struct Variety {
  Ideal ideal;
  std::optional<Parametrization> param;
  std::string label;

  int ambient_dim() const { return ideal.nvars() - 1; }  // the r of P^r
};

/// A linear subspace of P^r maintained in both presentations: an echelon
/// spanning set of points and an echelon set of linear forms vanishing
/// exactly on the span. #points + #forms == nvars always.
class LinearSpace {
public:
  /// Span of the given points (zero vectors ignored). Throws DomainError if
  /// the span is empty.
  static LinearSpace from_points(const Ring& R, const std::vector<Point>& pts);

  /// Common zero set of linear forms given as coefficient rows. Throws
  /// DomainError if the zero set is empty (forms of full rank).
  static LinearSpace from_form_rows(const Ring& R, const std::vector<std::vector<uint32_t>>& rows);

  const Ring& ring() const { return ring_; }
  int nvars() const { return ring_.nvars; }
  int dim() const { return int(pts_.size()) - 1; }  // projective dimension

  const std::vector<Point>& points() const { return pts_; }
  const std::vector<std::vector<uint32_t>>& form_rows() const { return forms_; }

  /// The defining linear forms as polynomials.
  std::vector<Poly> forms() const;

  bool contains(const Point& pt) const;

private:
  LinearSpace() = default;
  Ring ring_;
  std::vector<Point> pts_;                   // echelon basis of the span
  std::vector<std::vector<uint32_t>> forms_; // echelon basis of the annihilator
};

/// True iff every generator vanishes at z.
bool point_on_ideal(const Ideal& I, const Point& z);

/// Ideal of the q-secant variety by join elimination: adjoin q-1 auxiliary
/// coordinate blocks y^(1)..y^(q-1), impose the ideal on each block and on
/// x - sum y^(i), and eliminate every auxiliary variable. q=1 returns the
/// ideal itself; q=0 returns the irrelevant ideal (the empty scheme).
Ideal secant_ideal_elim(const Variety& X, int q, const Caps& caps = {});

/// Degree-truncated q-secant ideal by interpolation: for each d <= dmax the
/// kernel of the evaluation matrix (degree-d monomials vs. sampled secant
/// points, dim S_d + 32 samples) is accepted once it survives a fresh batch
/// of 25% more samples; throws SamplingError if a slice never stabilizes.
/// Returns the ideal generated by the recovered slices (minimal generators
/// only). Requires a parametrization.
Ideal secant_ideal_interp(const Variety& X, int q, int dmax, Rng& rng, const Caps& caps = {});

/// Projective tangent space at z in X: the zero set of the linear forms
/// Jac(gens)(z) . x. For smooth z its dimension is dim X; at singular
/// points it is larger. Throws DomainError if z is not on the ideal.
LinearSpace tangent_space(const Variety& X, const Point& z);

/// The coordinate frame used to project away from L: an invertible matrix
/// whose first dim(L)+1 columns span L, completed by standard basis
/// vectors. Deterministic, so the ideal and any parametrization can be
/// transported through the same frame.
MatFp projection_frame(const Fp& F, const LinearSpace& L);

/// Image ideal of the projection away from L: change coordinates by
/// projection_frame(L) so L is spanned by the first dim(L)+1 basis vectors,
/// then eliminate that block. The result lives in a ring on the remaining
/// nvars - dim(L) - 1 variables. Inner projection = L a point of X;
/// tangential = L a tangent space; centers off the variety are allowed.
Ideal linear_projection(const Ideal& I, const LinearSpace& L, const Caps& caps = {});

/// Seeded sampling of a point of X through its parametrization; plane-curve
/// sources are sampled by intersecting with random lines and scanning the
/// resulting binary form for rational roots. Deterministic under a fixed
/// rng state. Throws SamplingError when the retry budget is exhausted and
/// DomainError if X has no parametrization.
Point sample_point(const Variety& X, Rng& rng);

/// A random point on a genuine q-secant: a random nonzero-coefficient
/// combination of q pairwise distinct sampled points of X.
Point sample_secant_point(const Variety& X, int q, Rng& rng);

}  // namespace sforge
