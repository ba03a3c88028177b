// Groebner engine tests: Buchberger correctness oracles, normal forms,
// elimination, ideal operations, graded pieces, caps.
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/groebner.hpp"
#include "core/rng.hpp"
#include "core/text_io.hpp"

using namespace sforge;

namespace {

Ring P3(Fp(32003), 4);

Ideal twisted_cubic() {
  std::vector<Poly> gens = {parse_poly(P3, "x0*x2 - x1^2"),
                            parse_poly(P3, "x0*x3 - x1*x2"),
                            parse_poly(P3, "x1*x3 - x2^2")};
  return Ideal(P3, gens);
}

// S-polynomial, built here independently of the engine internals.
Poly spoly_of(const Ring& R, const Order& ord, const Poly& f, const Poly& g) {
  int n = R.nvars;
  Mono l(size_t(n), 0);
  mono_lcm(f.lm(), g.lm(), l.data(), n);
  Mono qf(size_t(n), 0), qg(size_t(n), 0);
  mono_div(f.lm(), l.data(), qf.data(), n);
  mono_div(g.lm(), l.data(), qg.data(), n);
  Poly a = poly_mul_term(R.F, f, R.F.inv(f.lc()), qf.data());
  Poly b = poly_mul_term(R.F, g, R.F.inv(g.lc()), qg.data());
  return poly_sub(R.F, ord, a.resorted(ord), b.resorted(ord));
}

Poly rand_homog(Rng& rng, const Ring& R, int d, int nterms) {
  Poly f(R.nvars);
  for (int t = 0; t < nterms; ++t) {
    Mono m(size_t(R.nvars), 0);
    for (int k = 0; k < d; ++k) m[rng.below(uint64_t(R.nvars))]++;
    f.push_term(rng.fp_elem(R.F), m);
  }
  f.normalize(R.F, Order::grevlex());
  return f;
}

}  // namespace

TEST_CASE("twisted cubic: reduced basis and normal forms") {
  Ideal I = twisted_cubic();
  auto gb = I.groebner(Order::grevlex());
  CHECK(gb->g.size() == 3);
  for (const Poly& g : gb->g) {
    CHECK(g.lc() == 1);
    CHECK(g.homogeneous());
    CHECK(g.deg() == 2);
  }
  // x1^2 reduces to x0*x2 (the quadric relation, lead term x1^2).
  Poly nf = I.reduce(parse_poly(P3, "x1^2"));
  CHECK(poly_to_string(P3, nf) == "x0*x2");
  // Membership.
  CHECK(I.contains(parse_poly(P3, "x0*x2 - x1^2")));
  CHECK(I.contains(parse_poly(P3, "x0*x2^2 - x1^2*x2")));
  CHECK_FALSE(I.contains(parse_poly(P3, "x0*x3")));
  CHECK_FALSE(I.contains(parse_poly(P3, "x0")));
}

TEST_CASE("reduced GB structural invariants + every S-pair reduces to zero") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    int nv = 3 + int(rng.below(2));
    Ring R(Fp(32003), nv);
    std::vector<Poly> gens;
    int k = 2 + int(rng.below(2));
    for (int i = 0; i < k; ++i) {
      Poly f = rand_homog(rng, R, 2 + int(rng.below(2)), 3);
      if (!f.zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    Ideal I(R, gens);
    Order ord = trial % 2 ? Order::grevlex() : Order::elim(1);
    auto gb = I.groebner(ord);
    const auto& G = gb->g;
    // Structure: monic, pairwise non-divisible leads, irreducible tails.
    for (size_t i = 0; i < G.size(); ++i) {
      CHECK(G[i].lc() == 1);
      for (size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(mono_divides(G[j].lm(), G[i].lm(), nv));
        for (int t = 1; t < G[i].nterms(); ++t)
          CHECK_FALSE(mono_divides(G[j].lm(), G[i].mono(t), nv));
      }
    }
    // Original generators lie in the ideal.
    for (const Poly& f : gens) {
      Poly nf = normal_form(R, f.resorted(ord), G, ord);
      CHECK(nf.zero());
    }
    // Definitional Groebner property: all S-polynomials reduce to zero.
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = i + 1; j < G.size(); ++j) {
        Poly s = spoly_of(R, ord, G[i], G[j]);
        Poly nf = normal_form(R, s, G, ord);
        CHECK(nf.zero());
      }
  }
}

TEST_CASE("determinism: identical inputs give identical bases") {
  Ideal I1 = twisted_cubic(), I2 = twisted_cubic();
  std::string a = ideal_to_text(I1), b = ideal_to_text(I2);
  CHECK(a == b);
}

TEST_CASE("elimination: Veronese conic from its parametrization graph") {
  // Graph ring (y0, y1, x0, x1, x2) as variables 0..4; eliminate the front 2.
  Ring G(Fp(32003), 5);
  std::vector<Poly> gens = {
      parse_poly(G, "x2 - x0^2"),   // using x-letter for all 5 graph vars:
      parse_poly(G, "x3 - x0*x1"),  // y0=x0, y1=x1, targets x2,x3,x4
      parse_poly(G, "x4 - x1^2"),
  };
  Ideal graph(G, gens, /*require_homogeneous=*/false);
  Ideal conic = eliminate(graph, {0, 1});
  CHECK(conic.nvars() == 3);
  auto gb = conic.groebner(Order::grevlex());
  REQUIRE(gb->g.size() == 1);
  CHECK(poly_to_string(conic.ring(), gb->g[0]) == "x1^2 - x0*x2");
}

TEST_CASE("elimination agrees with hand-computed substitution") {
  // x0^2 + x1^2 - x2^2 and x0 + x1 - x2: eliminating x0 gives
  // 2*x1^2 - 2*x1*x2, monic x1^2 - x1*x2 (in the surviving vars x1, x2).
  Ring R(Fp(32003), 3);
  Ideal I(R, {parse_poly(R, "x0^2 + x1^2 - x2^2"),
              parse_poly(R, "x0 + x1 - x2")});
  Ideal E = eliminate(I, {0});
  auto gb = E.groebner(Order::grevlex());
  REQUIRE(gb->g.size() == 1);
  CHECK(poly_to_string(E.ring(), gb->g[0]) == "x0^2 - x0*x1");
}

TEST_CASE("ideal equality, sum, containment") {
  Ideal I = twisted_cubic();
  // Same ideal from a different generating set: add a superfluous cubic.
  std::vector<Poly> gens2 = I.gens();
  Poly extra = poly_mul(P3.F, Order::grevlex(), gens2[0],
                        parse_poly(P3, "x0 + 3*x3"));
  gens2.push_back(extra);
  Ideal J(P3, gens2);
  CHECK(ideal_equal(I, J));
  CHECK(ideal_contains(J, I));
  Ideal irr = irrelevant_ideal(P3);
  CHECK(ideal_contains(irr, I));
  CHECK_FALSE(ideal_contains(I, irr));
  Ideal S = ideal_sum(I, irr);
  CHECK(ideal_equal(S, irr));
}

TEST_CASE("linear change of coordinates round-trips at the ideal level") {
  Rng rng(31);
  Ideal I = twisted_cubic();
  MatFp A(4, 4);
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A.at(i, j) = rng.fp_elem(P3.F);
  } while (mat_det(P3.F, A) == 0);
  Ideal J = ideal_linear_change(I, A);
  CHECK_FALSE(ideal_equal(I, J));  // generic change moves the ideal
  Ideal back = ideal_linear_change(J, mat_inverse(P3.F, A));
  CHECK(ideal_equal(I, back));
}

TEST_CASE("graded pieces of the twisted cubic") {
  Ideal I = twisted_cubic();
  // dim (S/I)_d = 3d + 1, so dim I_d = C(d+3,3) - (3d+1).
  for (int d = 1; d <= 6; ++d) {
    long long total = count_monomials(4, d);
    long long quotient = 3 * d + 1;
    CHECK(graded_dim(I, d) == total - quotient);
  }
  GradedPiece g2 = graded_piece(I, 2);
  CHECK(g2.ambient_dim == 10);
  CHECK(g2.basis.size() == 3);
}

TEST_CASE("caps fail loudly") {
  Ideal I = twisted_cubic();
  Caps tight;
  tight.max_degree = 1;
  CHECK_THROWS_AS(I.groebner(Order::grevlex(), tight), CapExceeded);
  Caps pairless;
  pairless.max_pairs = 0;
  Ideal I2 = twisted_cubic();  // fresh cache
  CHECK_THROWS_AS(I2.groebner(Order::grevlex(), pairless), CapExceeded);
}

TEST_CASE("irrelevant ideal and zero ideal conventions") {
  Ideal irr = irrelevant_ideal(P3);
  CHECK(irr.gens().size() == 4);
  auto gb = irr.groebner(Order::grevlex());
  CHECK(gb->g.size() == 4);
  Ideal zero(P3, {});
  CHECK(zero.zero());
  CHECK(zero.groebner(Order::grevlex())->g.empty());
  CHECK(graded_dim(zero, 3) == 0);
}
