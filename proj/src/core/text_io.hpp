// Text formats: polynomial grammar, ideal files, parametrization sidecars,
// and projective points.
//
// Polynomial grammar (shared by every input file):
//   variables x0..xr, operators + - * ^, integer coefficients
//   (reduced mod p on parse).  Example: 3*x0^2*x2 - x1^3 + 14
//
// Ideal file:
//   ring char=<p> vars=x0..x<r>
//   <one generator per line>
// '#' starts a comment (whole line or trailing); blank lines are skipped.
// Canonical output prints the reduced grevlex Groebner basis, sorted
// ascending by lead monomial.
//
// Parametrization sidecar:
//   param char=<p> source=y0..y<m> target=x0..x<r>
//   x<i> = <polynomial in y0..ym>     (one line per target coordinate)
//   constraint <polynomial in y0..ym> (zero or more lines)
//
// Point: (a0:a1:...:ar) with integer entries, reduced mod p on parse.
#pragma once

#include <string>
#include <vector>

#include "core/groebner.hpp"
#include "core/param.hpp"
#include "core/poly.hpp"

namespace sforge {

/// Render a polynomial re-parsably.  Coefficients are printed symmetrically
/// lifted (values above p/2 print as negatives), so small integer data
/// round-trips as written.
std::string poly_to_string(const Ring& R, const Poly& f, char var_letter = 'x');

/// Parse a polynomial in the shared grammar.  Adjacency is accepted as
/// multiplication ("2x0" == "2*x0").  Throws DomainError on syntax errors,
/// out-of-range variables, or non-integer input.
Poly parse_poly(const Ring& R, const std::string& text, char var_letter = 'x');

/// Parsed contents of an ideal file.
struct IdealFileData {
  Ring ring;
  std::vector<Poly> gens;
  Ideal ideal(bool require_homogeneous = true) const {
    return Ideal(ring, gens, require_homogeneous);
  }
};

IdealFileData parse_ideal_text(const std::string& text);
IdealFileData read_ideal_file(const std::string& path);

/// Render an ideal file.  canonical=true prints the reduced grevlex
/// Groebner basis (sorted ascending by lead); false prints the given
/// generators as-is.
std::string ideal_to_text(const Ideal& I, bool canonical = true,
                          const Caps& caps = Caps{});
void write_ideal_file(const std::string& path, const Ideal& I,
                      bool canonical = true, const Caps& caps = Caps{});

std::string param_to_text(const Parametrization& P);
Parametrization parse_param_text(const std::string& text);
Parametrization read_param_file(const std::string& path);
void write_param_file(const std::string& path, const Parametrization& P);

/// Projective point I/O over the given field.
std::string point_to_string(const std::vector<uint32_t>& pt);
std::vector<uint32_t> parse_point(const Fp& F, const std::string& text);

/// Whole-file helpers; throw DomainError with the path on failure.
std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, const std::string& content);

}  // namespace sforge
