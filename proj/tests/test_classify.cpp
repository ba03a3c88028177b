// Classification of secant varieties: the closed-form degree/Betti bound
// families with their recurrences, projection-step bookkeeping, the
// minimal-degree and del Pezzo characterizations checked condition by
// condition on worked curves and hypersurfaces, ideal composition from
// inner projections, prolongation, and the tangential-projection criterion.
#include "doctest.h"

#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/geometry.hpp"
#include "core/hilbert.hpp"
#include "core/text_io.hpp"

using namespace sforge;

namespace {

const Fp F0(32003);

const EquivalenceCheck& get_check(const ClassificationReport& rep, const std::string& name) {
  for (const EquivalenceCheck& c : rep.checks)
    if (c.condition == name) return c;
  REQUIRE_MESSAGE(false, "missing condition " << name);
  static const EquivalenceCheck none{};
  return none;
}

// Every computed condition with the given prefix must carry the same verdict.
void check_family(const ClassificationReport& rep, const std::string& prefix, bool expected) {
  int seen = 0;
  for (const EquivalenceCheck& c : rep.checks) {
    if (c.condition.rfind(prefix + "(", 0) != 0) continue;
    ++seen;
    CAPTURE(c.condition);
    CHECK(c.computed);
    CHECK(c.value == expected);
  }
  CHECK(seen >= 4);
  const EquivalenceCheck& agg = get_check(rep, prefix + ":agreement");
  CHECK(agg.computed);
  CHECK(agg.value);
}

}  // namespace

TEST_CASE("closed-form families: pins, recurrences, and specializations") {
  // Hand-checked values.
  CHECK(formula_Dmin(1, 2) == 3);
  CHECK(formula_Dmin(3, 2) == 10);
  CHECK(formula_Dalmost(2, 2) == 9);
  CHECK(formula_Dalmost(3, 1) == 5);
  CHECK(formula_B(4, 1, 2) == 20);
  CHECK(formula_B(4, 2, 2) == 45);
  CHECK(formula_B(4, 3, 2) == 36);
  CHECK(formula_B(4, 4, 2) == 10);
  CHECK(formula_Bprime(3, 1, 1) == 5);
  CHECK(formula_Bprime(3, 2, 1) == 5);
  CHECK(formula_Bprime(2, 1, 2) == 2);
  CHECK(formula_genus_min(1, 2) == 1);
  CHECK(formula_genus_min(3, 2) == 6);
  CHECK(formula_genus_dP_max(2, 2) == 10);
  CHECK(formula_genus_dP_max(3, 1) == 1);

  // B' vanishes at p = e; B vanishes beyond p = e.
  for (int e = 1; e <= 8; ++e)
    for (int q = 1; q <= 6; ++q) {
      CHECK(formula_Bprime(e, e, q) == 0);
      CHECK(formula_B(e, e + 1, q) == 0);
      CHECK(formula_B(e, 0, q) == 0);
    }

  // Pascal-type recurrences on the whole grid.
  for (int e = 1; e <= 8; ++e)
    for (int q = 1; q <= 6; ++q) {
      for (int p = 1; p <= e; ++p) {
        CAPTURE(e); CAPTURE(p); CAPTURE(q);
        CHECK(formula_B(e, p, q) ==
              formula_B(e - 1, p, q) + formula_B(e - 1, p - 1, q) + formula_B(e, p, q - 1));
      }
      CHECK(formula_Dalmost(e, q) == formula_Dalmost(e - 1, q) + formula_Dalmost(e, q - 1));
    }

  // q = 1 specializations: B(e,p,1) = p*C(e+1,p+1), the classical row of a
  // variety of minimal degree, and Dalmost(e,1) = e + 2.
  for (int e = 1; e <= 8; ++e) {
    for (int p = 1; p <= e; ++p)
      CHECK(formula_B(e, p, 1) == p * binom(e + 1, p + 1));
    CHECK(formula_Dmin(e, 1) == e + 1);
    CHECK(formula_Dalmost(e, 1) == e + 2);
    CHECK(formula_genus_min(e, 1) == 0);
    CHECK(formula_genus_dP_max(e, 1) == 1);
  }

  CHECK_THROWS_AS(formula_B(-1, 1, 1), DomainError);
  CHECK_THROWS_AS(formula_B(2, -1, 1), DomainError);
  CHECK_THROWS_AS(formula_B(2, 1, -1), DomainError);
  CHECK_THROWS_AS(formula_Dmin(-1, 0), DomainError);
  CHECK_THROWS_AS(formula_genus_min(0, -2), DomainError);
}

TEST_CASE("projection steps transport ideals and parametrizations") {
  Rng rng(7);

  // Inner projection of the twisted cubic: a conic in the plane.
  const Variety C3 = family_rnc(F0, 3);
  const ProjectionStep inner = inner_projection(C3, rng);
  CHECK(inner.dropped == 1);
  CHECK(inner.image.ideal.nvars() == 3);
  const HilbertData hd_in = hilbert_data(inner.image.ideal);
  CHECK(hd_in.codim == 1);
  CHECK(hd_in.degree == 2);
  REQUIRE(inner.image.param.has_value());
  // The transported parametrization still lands on the image.
  for (int t = 0; t < 3; ++t)
    CHECK(point_on_ideal(inner.image.ideal, sample_point(inner.image, rng)));
  // Image equations pull back to equations of the cone over the image, which
  // contains the curve whenever the center lies on it.
  const Ideal lifted = lift_subring_ideal(inner.image.ideal, inner.frame_inv, inner.dropped);
  CHECK(lifted.nvars() == 4);
  CHECK(ideal_contains(C3.ideal, lifted));

  // Tangential projection of the rational normal quartic: a conic again
  // (degree drops by 2 through the tangent line).
  const Variety C4 = family_rnc(F0, 4);
  const ProjectionStep tang = tangential_projection(C4, rng);
  CHECK(tang.dropped == 2);
  CHECK(point_on_ideal(C4.ideal, tang.center));
  const HilbertData hd_t = hilbert_data(tang.image.ideal);
  CHECK(hd_t.codim == 1);
  CHECK(hd_t.degree == 2);
  CHECK(ideal_contains(C4.ideal, lift_subring_ideal(tang.image.ideal, tang.frame_inv, 2)));

  // Projecting away from the whole space leaves no coordinates.
  const LinearSpace big = LinearSpace::from_points(
      C3.ideal.ring(),
      {Point{1, 0, 0, 0}, Point{0, 1, 0, 0}, Point{0, 0, 1, 0}, Point{0, 0, 0, 1}});
  CHECK_THROWS_AS(project_through(C3, big), DomainError);
}

TEST_CASE("a minimal-degree second secant: the rational normal sextic") {
  const Variety X = family_rnc(F0, 6);
  ClassificationReport rep = classify_secant(X, 2, /*seed=*/1);
  CHECK(rep.q == 2);
  CHECK(rep.e == 3);
  CHECK(rep.dim == 3);
  CHECK(rep.degree == 10);
  REQUIRE(rep.genus_defined);
  CHECK(rep.sectional_genus == formula_genus_min(3, 2));
  CHECK(rep.dim_forms_q1 == 10);

  CHECK(rep.is_minimal_degree);
  CHECK_FALSE(rep.is_almost_minimal_degree);
  CHECK_FALSE(rep.is_del_pezzo);

  REQUIRE(rep.betti_available);
  CHECK(rep.q_pure_CM);
  CHECK_FALSE(rep.q_pure_Gorenstein);
  CHECK(rep.betti.at(0, 0) == 1);
  CHECK(rep.betti.at(1, 2) == 10);
  CHECK(rep.betti.at(2, 2) == 15);
  CHECK(rep.betti.at(3, 2) == 6);
  CHECK(rep.betti.at(1, 1) == 0);
  CHECK(rep.regularity_bound.value == 3);
  CHECK(rep.regularity_bound.certified);
  CHECK(rep.strand.value == 3);
  CHECK(rep.strand.certified);
  CHECK(rep.max_p_property_N == rep.betti.imax);

  verify_equivalences(rep);
  check_family(rep, "minimal", true);
  check_family(rep, "delPezzo", false);
}

TEST_CASE("a del Pezzo second secant: the elliptic sextic") {
  const Variety X = family_elliptic(F0, 2, /*seed=*/1);
  REQUIRE(X.ideal.nvars() == 6);
  ClassificationReport rep = classify_secant(X, 2, /*seed=*/1, /*interp_dmax=*/4);
  CHECK(rep.e == 2);
  CHECK(rep.dim == 3);
  CHECK(rep.degree == formula_Dalmost(2, 2));
  REQUIRE(rep.genus_defined);
  CHECK(rep.sectional_genus == 10);
  CHECK(rep.dim_forms_q1 == 2);

  CHECK_FALSE(rep.is_minimal_degree);
  CHECK(rep.is_almost_minimal_degree);
  CHECK(rep.is_del_pezzo);

  // A complete intersection of two cubics: the full q-pure Gorenstein table.
  REQUIRE(rep.betti_available);
  CHECK(rep.q_pure_Gorenstein);
  CHECK_FALSE(rep.q_pure_CM);
  CHECK(rep.betti.at(0, 0) == 1);
  CHECK(rep.betti.at(1, 2) == 2);
  CHECK(rep.betti.at(2, 4) == 1);
  CHECK(rep.betti.at(1, 1) == 0);
  CHECK(rep.betti.at(2, 2) == 0);
  CHECK(rep.regularity_bound.value == 5);
  CHECK(rep.regularity_bound.certified);
  CHECK(rep.strand.value == 1);
  CHECK(rep.max_p_property_N == 1);

  verify_equivalences(rep);
  check_family(rep, "minimal", false);
  check_family(rep, "delPezzo", true);
}

TEST_CASE("a del Pezzo variety at q = 1: the Pluecker embedding of G(1,4)") {
  const Variety X = family_grassmann_pfaffian(F0, 5);
  ClassificationReport rep = classify_secant(X, 1, /*seed=*/1);
  CHECK(rep.e == 3);
  CHECK(rep.dim == 6);
  CHECK(rep.degree == 5);
  REQUIRE(rep.genus_defined);
  CHECK(rep.sectional_genus == 1);
  CHECK(rep.dim_forms_q1 == 5);

  CHECK_FALSE(rep.is_minimal_degree);
  CHECK(rep.is_del_pezzo);
  REQUIRE(rep.betti_available);
  CHECK(rep.q_pure_Gorenstein);
  CHECK(rep.betti.at(0, 0) == 1);
  CHECK(rep.betti.at(1, 1) == 5);
  CHECK(rep.betti.at(2, 1) == 5);
  CHECK(rep.betti.at(3, 2) == 1);
  CHECK(rep.regularity_bound.value == 3);
  CHECK(rep.regularity_bound.certified);
  CHECK(rep.max_p_property_N == 2);

  verify_equivalences(rep);
  check_family(rep, "minimal", false);
  check_family(rep, "delPezzo", true);
}

TEST_CASE("ideal composition holds for a minimal secant, fails for the genus-2 curve") {
  // Positive control: a minimal-degree second secant of codimension >= 2.
  const Variety X = family_rnc(F0, 6);
  const Ideal Isec = secant_ideal_elim(X, 2);
  const ICReport pos = verify_IC(X, 2, Isec, /*seed=*/3);
  CHECK(pos.points == 4);
  CHECK(pos.contained);
  CHECK(pos.holds);

  // Negative control: the ideal of a genus-2 sextic in P^4 has four quadric
  // generators, but its three inner projections contribute at most one each.
  const Variety Y = family_genus2(F0, /*seed=*/1);
  REQUIRE(Y.ideal.nvars() == 5);
  CHECK(graded_dim(Y.ideal, 2) == 4);
  const ICReport neg = verify_IC(Y, 1, Y.ideal, /*seed=*/3);
  CHECK(neg.points == 3);
  CHECK(neg.contained);
  CHECK_FALSE(neg.holds);
}

TEST_CASE("prolongation of a space of forms") {
  const Ring R2(F0, 2);
  const Order ord = Order::grevlex();
  const Poly x = poly_var(2, 0), y = poly_var(2, 1);
  const Poly x2 = poly_mul(R2.F, ord, x, x);
  const Poly xy = poly_mul(R2.F, ord, x, y);
  const Poly y2 = poly_mul(R2.F, ord, y, y);

  // The full quadric space prolongs to the full cubic space.
  CHECK(prolongation(R2, {x2, xy, y2}).size() == 4);

  // {x^2, y^2}: partials must avoid the cross term, so only x^3 and y^3.
  const std::vector<Poly> cubes = prolongation(R2, {x2, y2});
  REQUIRE(cubes.size() == 2);
  for (const Poly& f : cubes) {
    CHECK(f.deg() == 3);
    CHECK(f.nterms() == 1);
  }

  // A single cross term prolongs to nothing.
  CHECK(prolongation(R2, {xy}).empty());

  // The quadrics of the twisted cubic prolong to nothing: the degree-3 slice
  // of its second secant ideal is zero because the second secant fills P^3.
  const Variety C3 = family_rnc(F0, 3);
  CHECK(prolongation(C3.ideal.ring(), C3.ideal.gens()).empty());

  // The quadrics of the rational normal quartic prolong to exactly the
  // degree-3 slice of the second secant ideal: the one defining cubic.
  const Variety C4 = family_rnc(F0, 4);
  const std::vector<Poly>& W = C4.ideal.gens();
  REQUIRE(W.size() == 6);
  const std::vector<Poly> P4 = prolongation(C4.ideal.ring(), W);
  REQUIRE(P4.size() == 1);
  const Ideal S2 = secant_ideal_elim(C4, 2);
  CHECK(S2.contains(P4.front()));
  // Partials of the result land back in the span of W: cross-check through
  // the public derivative.
  const MonomialIndex ix(5, 2);
  EchelonBuilder span(F0, int(ix.size()));
  for (const Poly& w : W) span.add_row(poly_to_vector(w, ix));
  for (const Poly& f : P4) {
    CHECK(f.homogeneous());
    CHECK(f.deg() == 3);
    for (int v = 0; v < 5; ++v) {
      const Poly df = poly_derivative(F0, f, v);
      const std::vector<uint32_t> res = span.reduce(poly_to_vector(df, ix));
      for (uint32_t c : res) CHECK(c == 0);
    }
  }

  CHECK_THROWS_AS(prolongation(R2, {}), DomainError);
  CHECK_THROWS_AS(prolongation(R2, {x, y2}), DomainError);
}

TEST_CASE("the tangential-projection criterion agrees on both routes") {
  // Positive: the second secant of the rational normal septic is minimal and
  // one tangential projection lands on the rational normal quintic.
  const GBcwfReport pos = verify_gBcwf_corollary(family_rnc(F0, 7), 2, /*seed=*/5);
  CHECK(pos.secant_minimal);
  CHECK(pos.projection_minimal);
  CHECK(pos.projection_codim == 4);
  CHECK(pos.projection_degree == 5);
  CHECK(pos.agree);

  // Negative: the genus-2 sextic has a degree-8 hypersurface as its second
  // secant, and its tangential projection is a plane quartic.
  const GBcwfReport neg =
      verify_gBcwf_corollary(family_genus2(F0, 1), 2, /*seed=*/5, /*interp_dmax=*/8);
  CHECK_FALSE(neg.secant_minimal);
  CHECK_FALSE(neg.projection_minimal);
  CHECK(neg.projection_codim == 1);
  CHECK(neg.projection_degree == 4);
  CHECK(neg.agree);
}
