// Betti tables via Koszul strand homology: Koszul-complex rows for the
// residue field, hypersurfaces, complete intersections, determinantal
// secant ideals, window statistics, and alternating sums against the
// Hilbert numerator.
#include "doctest.h"

#include <vector>

#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/geometry.hpp"
#include "core/hilbert.hpp"
#include "core/koszul.hpp"
#include "core/text_io.hpp"

using namespace sforge;

namespace {

const Fp F0(32003);

// Every alternating sum the window determines must match the corresponding
// Hilbert-numerator coefficient (the numerator is the generating function of
// the same Euler characteristics).
void check_alternating(const Ideal& I, const BettiWindow& B) {
  const TPoly num = hilbert_data(I).numerator;
  const std::vector<long long> alt = alternating_sums(B);
  for (size_t j = 0; j < alt.size(); ++j) {
    const long long want = j < num.size() ? num[j] : 0;
    CAPTURE(j);
    CHECK(alt[j] == want);
  }
}

}  // namespace

TEST_CASE("residue field: the table is the Koszul complex") {
  Ring P3(F0, 4);
  Ideal I = irrelevant_ideal(P3);
  BettiWindow B = koszul_betti(I, 5, 2);
  for (int i = 0; i <= 5; ++i) CHECK(B.at(i, 0) == binom(4, i));
  for (int j = 1; j <= 2; ++j)
    for (int i = 0; i <= 5; ++i) CHECK(B.at(i, j) == 0);
  CHECK(B.depth_cut == 0);
  CHECK(B.reduced_vars == 4);
  CHECK(B.artinian);
  CHECK(B.top_nonzero_slice == 0);

  WindowBound reg = regularity(B);
  CHECK(reg.value == 1);
  CHECK(reg.certified);
  WindowBound sl = strand_length(B, 0);
  CHECK(sl.value == 4);
  CHECK(sl.certified);
  check_alternating(I, B);
}

TEST_CASE("a single conic in the plane") {
  Ring P2(F0, 3);
  Ideal I(P2, {parse_poly(P2, "x0*x2 - x1^2")});
  BettiWindow B = koszul_betti(I, 3, 3);
  CHECK(B.at(0, 0) == 1);
  CHECK(B.at(1, 1) == 1);
  long long total = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) total += B.at(i, j);
  CHECK(total == 2);  // nothing else anywhere in the window

  CHECK(B.artinian);
  CHECK(B.depth_cut == 2);
  CHECK(B.reduced_vars == 1);
  CHECK(regularity(B).value == 2);
  CHECK(regularity(B).certified);
  CHECK(property_N(B, 2, 1).holds);
  CHECK(property_N(B, 2, 1).certified);
  PropertyN bad = property_N(B, 1, 1);
  CHECK_FALSE(bad.holds);  // the quadric itself sits in row 1
  CHECK(bad.certified);
  check_alternating(I, B);
}

TEST_CASE("complete intersection of two cubics in P^3") {
  Ring P3(F0, 4);
  Ideal I(P3, {parse_poly(P3, "x0^3 + x1^3 + x2^3 + x3^3"),
               parse_poly(P3, "x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3")});
  HilbertData hd = hilbert_data(I);
  REQUIRE(hd.proj_dim == 1);  // genuinely a complete intersection curve
  REQUIRE(hd.degree == 9);

  BettiWindow B = koszul_betti(I, 3, 5);
  CHECK(B.at(0, 0) == 1);
  CHECK(B.at(1, 2) == 2);
  CHECK(B.at(2, 4) == 1);
  long long total = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 5; ++j) total += B.at(i, j);
  CHECK(total == 4);

  CHECK(B.artinian);
  CHECK(B.reduced_vars == 2);
  WindowBound reg = regularity(B);
  CHECK(reg.value == 5);
  CHECK(reg.certified);
  CHECK(strand_length(B, 2).value == 1);
  CHECK(strand_length(B, 4).value == 2);
  check_alternating(I, B);
}

TEST_CASE("second secant of the rational normal septic") {
  Variety X = family_rnc(F0, 7);
  Ideal S2 = secant_ideal_elim(X, 2);
  BettiWindow B = koszul_betti(S2, 5, 5);

  CHECK(B.at(0, 0) == 1);
  CHECK(B.at(1, 2) == 20);
  CHECK(B.at(2, 2) == 45);
  CHECK(B.at(3, 2) == 36);
  CHECK(B.at(4, 2) == 10);
  long long total = 0;
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) total += B.at(i, j);
  CHECK(total == 1 + 20 + 45 + 36 + 10);  // rows 0 and 2 only: the table is pure

  CHECK(B.artinian);           // arithmetically Cohen-Macaulay quotient
  CHECK(B.reduced_vars == 4);  // cut down to the codimension
  WindowBound reg = regularity(B);
  CHECK(reg.value == 3);
  CHECK(reg.certified);
  WindowBound sl = strand_length(B, 2);
  CHECK(sl.value == 4);
  CHECK(sl.certified);
  CHECK(property_N(B, 3, 4).holds);
  PropertyN n32 = property_N(B, 2, 1);
  CHECK_FALSE(n32.holds);
  check_alternating(S2, B);
}

TEST_CASE("window metadata on degenerate inputs") {
  Ring P2(F0, 3);

  // Unit ideal: the zero module has an empty table.
  Ideal unit(P2, {parse_poly(P2, "1")}, false);
  BettiWindow B = koszul_betti(unit, 3, 2);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 2; ++j) CHECK(B.at(i, j) == 0);
  CHECK(B.artinian);
  CHECK(B.top_nonzero_slice == -1);
  CHECK(regularity(B).value == 0);
  CHECK(regularity(B).certified);

  // Zero ideal: S itself, beta_{0,0} = 1 and nothing else; the reduction
  // stops at one variable so the answer is exact but not certified complete.
  Ideal zero(P2, {});
  BettiWindow Z = koszul_betti(zero, 2, 2);
  CHECK(Z.at(0, 0) == 1);
  long long total = 0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) total += Z.at(i, j);
  CHECK(total == 1);
  CHECK_FALSE(Z.artinian);
  CHECK(regularity(Z).value == 1);
  CHECK_FALSE(regularity(Z).certified);
  check_alternating(zero, Z);

  // The out-of-window accessor is zero, and bad windows are rejected.
  CHECK(B.at(-1, 0) == 0);
  CHECK(B.at(0, 99) == 0);
  CHECK_THROWS_AS(koszul_betti(zero, -1, 2), DomainError);
}

TEST_CASE("table rendering marks zero cells") {
  Ring P2(F0, 3);
  Ideal I(P2, {parse_poly(P2, "x0*x2 - x1^2")});
  BettiWindow B = koszul_betti(I, 2, 1);
  std::string s = betti_table_string(B);
  CHECK(s.find('-') != std::string::npos);
  CHECK(s.find('1') != std::string::npos);
}
