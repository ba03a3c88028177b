#include <algorithm>
#include <vector>

#include "core/errors.hpp"
#include "core/geometry.hpp"
#include "core/hilbert.hpp"
#include "core/text_io.hpp"
#include "doctest.h"

using namespace sforge;

namespace {

// x_a * x_d - x_b * x_c
Poly minor2(const Ring& R, int a, int b, int c, int d) {
  Poly f(R.nvars);
  Mono m(size_t(R.nvars), 0);
  m[size_t(a)]++;
  m[size_t(d)]++;
  f.push_term(1, m);
  m[size_t(a)]--;
  m[size_t(d)]--;
  m[size_t(b)]++;
  m[size_t(c)]++;
  f.push_term(R.F.neg(1), m);
  f.normalize(R.F, Order::grevlex());
  return f;
}

// Rational normal curve of degree d in P^d: 2-minors of the 2 x d Hankel
// matrix with rows (x0..x_{d-1}) / (x1..x_d); param (s:t) -> (s^d : ... : t^d).
Variety rnc(const Fp& F, int d) {
  Ring R(F, d + 1);
  std::vector<Poly> gens;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) gens.push_back(minor2(R, i, i + 1, j, j + 1));
  Parametrization pm;
  pm.source = Ring(F, 2);
  for (int i = 0; i <= d; ++i) {
    Poly comp(2);
    Mono m(2, 0);
    m[0] = Exp(d - i);
    m[1] = Exp(i);
    comp.push_term(1, m);
    comp.normalize(F, Order::grevlex());
    pm.comps.push_back(comp);
  }
  Variety X;
  X.ideal = Ideal(R, std::move(gens));
  X.param = pm;
  X.label = "rnc(" + std::to_string(d) + ")";
  return X;
}

// A plane curve V(C) in P^2 carried by the identity system (x0:x1:x2).
Variety plane_curve(const Ring& R, const Poly& C) {
  Variety X;
  X.ideal = Ideal(R, {C});
  Parametrization pm;
  pm.source = R;
  for (int i = 0; i < 3; ++i) {
    Poly v = poly_var(3, i);
    pm.comps.push_back(v);
  }
  pm.constraints.push_back(C);
  X.param = pm;
  X.label = "plane curve";
  return X;
}

MatFp catalecticant3(const Fp& F, const Point& w) {
  MatFp M(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = w[size_t(i + j)];
  (void)F;
  return M;
}

}  // namespace

TEST_CASE("linear spaces: point/form duality") {
  Fp F(32003);
  Rng rng(99);
  for (int n = 2; n <= 6; ++n) {
    Ring R(F, n);
    for (int k = 1; k < n; ++k) {
      std::vector<Point> pts;
      for (int i = 0; i < k; ++i) {
        Point p(size_t(n), 0);
        for (int j = 0; j < n; ++j) p[size_t(j)] = rng.fp_elem(F);
        pts.push_back(p);
      }
      LinearSpace L = LinearSpace::from_points(R, pts);
      CHECK(int(L.points().size()) + int(L.form_rows().size()) == n);
      for (const Point& p : pts) CHECK(L.contains(p));
      // rebuild from the forms: same span
      LinearSpace M = LinearSpace::from_form_rows(R, L.form_rows());
      CHECK(M.dim() == L.dim());
      for (const Point& p : L.points()) CHECK(M.contains(p));
      for (const Point& p : M.points()) CHECK(L.contains(p));
      // forms as polynomials vanish on the spanning points
      for (const Poly& f : L.forms())
        for (const Point& p : L.points()) CHECK(poly_eval(F, f, p) == 0);
    }
  }
  CHECK_THROWS_AS(LinearSpace::from_points(Ring(F, 3), {Point{0, 0, 0}}), DomainError);
}

TEST_CASE("sampling: parametrized families satisfy their ideals") {
  Fp F(32003);
  Variety X = rnc(F, 3);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    Point z = sample_point(X, rng);
    CHECK(point_on_ideal(X.ideal, z));
  }
  // determinism
  Rng r1(7), r2(7);
  CHECK(sample_point(X, r1) == sample_point(X, r2));
  // no parametrization -> domain error
  Variety bare;
  bare.ideal = X.ideal;
  Rng r3(1);
  CHECK_THROWS_AS(sample_point(bare, r3), DomainError);
}

TEST_CASE("sampling: plane-curve source via line intersections") {
  Fp F(32003);
  Ring R(F, 3);
  Poly C = parse_poly(R, "x0^2 + x1^2 - x2^2");
  Variety X = plane_curve(R, C);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    Point z = sample_point(X, rng);
    CHECK(poly_eval(F, C, z) == 0);
  }
  // quartic with sparse rational points still samples fine
  Poly Q = parse_poly(R, "x0^4 + 3*x1^4 + 5*x2^4 + x0*x1*x2^2");
  Variety Y = plane_curve(R, Q);
  Rng rng(5);
  Point z = sample_point(Y, rng);
  CHECK(poly_eval(F, Q, z) == 0);
}

TEST_CASE("secant sampling: catalecticant rank certifies the span") {
  Fp F(32003);
  Variety X = rnc(F, 4);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    Point w = sample_secant_point(X, 2, rng);
    MatFp M = catalecticant3(F, w);
    CHECK(mat_rank(F, M) <= 2);
    // generic secant points are NOT on X: rank is exactly 2
    CHECK(mat_rank(F, catalecticant3(F, w)) == 2);
  }
}

TEST_CASE("join elimination: q=0 and q=1 conventions") {
  Fp F(32003);
  Variety X = rnc(F, 3);
  Ideal S0 = secant_ideal_elim(X, 0);
  CHECK(ideal_equal(S0, irrelevant_ideal(X.ideal.ring())));
  Ideal S1 = secant_ideal_elim(X, 1);
  CHECK(ideal_equal(S1, X.ideal));
}

TEST_CASE("join elimination: secant of the twisted cubic fills P^3") {
  Fp F(32003);
  Variety X = rnc(F, 3);
  Ideal S2 = secant_ideal_elim(X, 2);
  CHECK(S2.gens().empty());
}

TEST_CASE("join elimination: Hankel determinant cuts the rnc(4) secant") {
  Fp F(32003);
  Variety X = rnc(F, 4);
  Ideal S2 = secant_ideal_elim(X, 2);
  Ring R = X.ideal.ring();
  Poly det = parse_poly(R, "x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3");
  CHECK(ideal_equal(S2, Ideal(R, {det})));
  // no q-forms in the q-secant ideal
  CHECK(graded_dim(S2, 2) == 0);
  CHECK(graded_dim(S2, 3) == 1);
}

TEST_CASE("interpolation agrees with elimination") {
  Fp F(32003);
  // q=1 on the twisted cubic recovers the ideal itself
  {
    Variety X = rnc(F, 3);
    Rng rng(11);
    Ideal J = secant_ideal_interp(X, 1, 2, rng);
    CHECK(ideal_equal(J, X.ideal));
  }
  // q=2 on rnc(4) recovers the Hankel cubic
  {
    Variety X = rnc(F, 4);
    Rng rng(12);
    Ideal J = secant_ideal_interp(X, 2, 3, rng);
    Ideal S2 = secant_ideal_elim(X, 2);
    CHECK(ideal_equal(J, S2));
  }
  // missing parametrization is refused
  {
    Variety bare;
    bare.ideal = rnc(F, 3).ideal;
    Rng rng(1);
    CHECK_THROWS_AS(secant_ideal_interp(bare, 2, 3, rng), DomainError);
  }
}

TEST_CASE("tangent spaces: smooth and singular reference points") {
  Fp F(32003);
  Ring R3(F, 3);
  Variety conic;
  conic.ideal = Ideal(R3, {parse_poly(R3, "x0*x2 - x1^2")});
  Point z{1, 0, 0};
  LinearSpace T = tangent_space(conic, z);
  CHECK(T.dim() == 1);
  CHECK(T.contains(z));
  CHECK(T.contains(Point{0, 1, 0}));
  CHECK(!T.contains(Point{0, 0, 1}));
  // defining form is x2 (up to scale)
  REQUIRE(T.form_rows().size() == 1);
  CHECK(T.form_rows()[0][0] == 0);
  CHECK(T.form_rows()[0][1] == 0);
  CHECK(T.form_rows()[0][2] != 0);

  // cone x1*x2 - x3^2 in P^3 at its vertex: every gradient vanishes
  Ring R4(F, 4);
  Variety cone;
  cone.ideal = Ideal(R4, {parse_poly(R4, "x1*x2 - x3^2")});
  LinearSpace V = tangent_space(cone, Point{1, 0, 0, 0});
  CHECK(V.dim() == 3);

  // smooth curve point: tangent line of the twisted cubic
  Variety X = rnc(F, 3);
  Rng rng(3);
  Point p = sample_point(X, rng);
  LinearSpace Tp = tangent_space(X, p);
  CHECK(Tp.dim() == 1);
  CHECK(Tp.contains(p));

  // off-variety point is rejected
  CHECK_THROWS_AS(tangent_space(conic, Point{1, 1, 0}), DomainError);
}

TEST_CASE("linear projection: twisted cubic from an inner point is a conic") {
  Fp F(32003);
  Variety X = rnc(F, 3);

  // from the coordinate point (1:0:0:0) the image is the conic x0*x2 - x1^2
  {
    LinearSpace L = LinearSpace::from_points(X.ideal.ring(), {Point{1, 0, 0, 0}});
    Ideal J = linear_projection(X.ideal, L);
    CHECK(J.nvars() == 3);
    Ring R3 = J.ring();
    CHECK(ideal_equal(J, Ideal(R3, {parse_poly(R3, "x0*x2 - x1^2")})));
  }
  // from a sampled point: still a plane conic (one quadric, no linear form)
  {
    Rng rng(8);
    Point z = sample_point(X, rng);
    LinearSpace L = LinearSpace::from_points(X.ideal.ring(), {z});
    Ideal J = linear_projection(X.ideal, L);
    CHECK(graded_dim(J, 1) == 0);
    CHECK(graded_dim(J, 2) == 1);
  }
  // projecting P^2 from a line leaves no room
  {
    Ring R3(F, 3);
    Ideal I(R3, {parse_poly(R3, "x0*x2 - x1^2")});
    LinearSpace L = LinearSpace::from_points(R3, {Point{1, 0, 0}, Point{0, 1, 0}});
    CHECK_THROWS_AS(linear_projection(I, L), DomainError);
  }
}

TEST_CASE("projection commutes with secants on rnc(5)") {
  Fp F(32003);
  Variety X = rnc(F, 5);
  Rng rng(21);
  Point z = sample_point(X, rng);
  LinearSpace L = LinearSpace::from_points(X.ideal.ring(), {z});

  Ideal S2 = secant_ideal_elim(X, 2);
  Ideal left = linear_projection(S2, L);  // S^2(X) projected

  Ideal Xz = linear_projection(X.ideal, L);
  Variety Xp;
  Xp.ideal = Xz;
  Xp.label = "rnc(5) projected";
  Ideal right = secant_ideal_elim(Xp, 2);  // secant of the projection

  CHECK(ideal_equal(left, right));
}

TEST_CASE("tangential projection preserves secant codimension on rnc(5)") {
  Fp F(32003);
  Variety X = rnc(F, 5);
  Rng rng(31);
  Point z = sample_point(X, rng);
  LinearSpace T = tangent_space(X, z);
  REQUIRE(T.dim() == 1);

  Ideal S2 = secant_ideal_elim(X, 2);
  HilbertData hs = hilbert_data(S2);
  // S^2(rnc 5) is a 3-fold in P^5: codim 2
  CHECK(hs.codim == 2);

  Ideal XT = linear_projection(X.ideal, T);
  HilbertData ht = hilbert_data(XT);
  // image is a curve in P^3 of the same secant codimension: codim 2
  CHECK(ht.codim == 2);
  CHECK(ht.degree == 3);
}
