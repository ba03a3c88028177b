#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/poly.hpp"

namespace sforge {

/// A rational parametrization of a projective variety: component forms of a
/// common degree on a source projective space, optionally constrained to a
/// hypersurface in the source (plane-curve models). Used for point sampling
/// and for the interpolation route to secant ideals.
struct Parametrization {
  Ring source;                   // ring of the source space
  std::vector<Poly> comps;       // target coordinates as forms in the source vars
  std::vector<Poly> constraints; // source points must satisfy these (usually 0 or 1)

  int target_nvars() const { return int(comps.size()); }
  bool valid() const { return !comps.empty(); }
};

}  // namespace sforge
