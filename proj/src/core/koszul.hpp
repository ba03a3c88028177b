// Graded Betti numbers by Koszul homology, never by free resolutions.
//
// For a homogeneous ideal I with quotient M = S/I and V the space of
// linear forms, the entry in column i, row j of the Betti table is
//
//   beta_{i,j} = dim_k H( Λ^{i+1}V ⊗ M_{j-1} -> Λ^iV ⊗ M_j -> Λ^{i-1}V ⊗ M_{j+1} ),
//
// the middle homology of the Koszul strand, with differential
// v_1∧...∧v_i ⊗ m  |->  Σ_k (-1)^{k-1} v_1∧...∧v̂_k∧...∧v_i ⊗ v_k m.
// This equals the rank of Tor_i(M, k) in internal degree i + j, i.e. the
// usual Macaulay-style table (column = homological index, row = slope).
//
// Before any rank is computed the quotient is cut down by certified
// non-zerodivisor hyperplanes: a random linear form is substituted away
// and kept only if the Hilbert-series numerator is unchanged, which holds
// exactly when the form is regular on M.  Each cut preserves every Betti
// number and shrinks the graded slices, so windows that would be hopeless
// in the ambient ring reduce to small exact linear algebra (for an
// arithmetically Cohen-Macaulay quotient the process reaches an Artinian
// reduction whose slices are the h-vector).  Ranks are taken dense below
// 512x512 and by sparse elimination above.
#pragma once

#include <string>
#include <vector>

#include "core/groebner.hpp"

namespace sforge {

/// A rectangular window of the Betti table, plus exactness metadata from
/// the reduction stage.  All entries inside the window are exact; the
/// metadata lets the window-level statistics certify statements about the
/// unseen remainder of the table (columns beyond the number of surviving
/// variables vanish by the syzygy theorem; rows beyond the top nonzero
/// slice of an Artinian reduction vanish because the slices are empty).
struct BettiWindow {
  int imax = 0;  // columns 0..imax
  int jmax = 0;  // rows 0..jmax
  uint32_t prime = 0;
  std::vector<std::vector<long long>> beta;  // beta[i][j]

  int depth_cut = 0;          // certified non-zerodivisor cuts applied
  int reduced_vars = 0;       // variables in the ring the ranks were computed in
  bool artinian = false;      // reduction reached a zero-dimensional quotient
  int top_nonzero_slice = 0;  // largest j with M_j != 0 (meaningful when artinian)

  long long at(int i, int j) const {
    if (i < 0 || i > imax || j < 0 || j > jmax) return 0;
    return beta[size_t(i)][size_t(j)];
  }
};

/// Compute the window 0..imax x 0..jmax for S/I.  Deterministic (the
/// reduction seed is fixed).  Throws CapExceeded with the offending block
/// size if a Koszul block would exceed caps.max_matrix entries.
BettiWindow koszul_betti(const Ideal& I, int imax, int jmax, const Caps& caps = {});

/// A window-derived value plus whether the window proves it outright.
struct WindowBound {
  long long value = 0;
  bool certified = false;
};

/// Least m such that the whole table vanishes in rows >= m, i.e. one more
/// than the largest nonzero row.  Certified when the window provably
/// contains every nonzero entry (Artinian reduction with the top slice
/// and all surviving columns inside the window).
WindowBound regularity(const BettiWindow& B);

/// max{ p : beta_{p,q} != 0 } along row q (0 when the row is empty).
/// Certified when every column of the reduced ring fits in the window.
WindowBound strand_length(const BettiWindow& B, int q);

/// Property N_{d,p}: beta_{i,j} = 0 for every i <= p and every j >= d.
/// A nonzero witness inside the window certifies failure regardless of
/// truncation; a clean window certifies success under the same conditions
/// as regularity().
struct PropertyN {
  bool holds = false;
  bool certified = false;
};
PropertyN property_N(const BettiWindow& B, int d, int p);

/// Alternating sums down the antidiagonals: B_j = Σ_i (-1)^i beta_{i,j-i}
/// (the Euler characteristic of internal degree j, which for a complete
/// table reproduces the Hilbert-series numerator).  Returns the prefix of
/// j-values the window determines completely.
std::vector<long long> alternating_sums(const BettiWindow& B);

/// Text rendering with rows labeled by j and '-' for zero entries.
std::string betti_table_string(const BettiWindow& B);

}  // namespace sforge
