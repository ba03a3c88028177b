#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "core/fp.hpp"

namespace sforge {

/// Dense row-major matrix over F_p. Sized for desk-scale exact linear
/// algebra: interpolation kernels, graded slices, Koszul differentials.
class MatFp {
public:
  MatFp() = default;
  MatFp(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  uint32_t at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  uint32_t& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  uint32_t* row(int i) { return a_.data() + size_t(i) * c_; }
  const uint32_t* row(int i) const { return a_.data() + size_t(i) * c_; }

  void append_row(const std::vector<uint32_t>& v);

private:
  int r_ = 0, c_ = 0;
  std::vector<uint32_t> a_;
};

/// In-place reduction to row echelon form (not fully reduced).
/// Returns the rank; pivot_cols (if non-null) receives the pivot column of
/// each of the first `rank` rows, strictly increasing.
int row_echelon(const Fp& F, MatFp& m, std::vector<int>* pivot_cols = nullptr);

/// Reduced row echelon form; returns rank.
int rref(const Fp& F, MatFp& m, std::vector<int>* pivot_cols = nullptr);

int mat_rank(const Fp& F, MatFp m);

/// Basis of the right kernel {x : m x = 0}; each kernel vector has length
/// cols(). Deterministic echelon construction: free columns in increasing
/// order, each with 1 at its own index.
std::vector<std::vector<uint32_t>> mat_kernel(const Fp& F, MatFp m);

/// Determinant of a square matrix.
uint32_t mat_det(const Fp& F, MatFp m);

/// Inverse of a square invertible matrix; throws DomainError if singular.
MatFp mat_inverse(const Fp& F, const MatFp& m);

/// Solve m x = b for one solution; returns false if inconsistent.
bool mat_solve(const Fp& F, MatFp m, std::vector<uint32_t> b, std::vector<uint32_t>& x);

MatFp mat_mul(const Fp& F, const MatFp& a, const MatFp& b);

/// Incremental rank tracker: rows are fed one at a time and reduced against
/// the pivots collected so far. Used by interpolation (online stabilization)
/// and by graded-slice construction.
class EchelonBuilder {
public:
  EchelonBuilder(const Fp& F, int cols) : F_(F), c_(cols) {}

  /// Reduce v against the current echelon; if a new pivot emerges the row is
  /// added and true is returned. v is consumed.
  bool add_row(std::vector<uint32_t> v);

  int rank() const { return int(rows_.size()); }
  int cols() const { return c_; }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  /// Fully reduce a vector against the echelon (returns the residual).
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

  /// Express v as a combination of the stored echelon rows; returns false
  /// if v is not in the row space. coords refers to rows() by position.
  bool coordinates(std::vector<uint32_t> v, std::vector<uint32_t>& coords) const;

private:
  Fp F_;
  int c_;
  std::vector<std::vector<uint32_t>> rows_;  // echelon rows, pivot-monic
  std::vector<int> piv_;                     // pivot column per row
};

/// Sparse column-list matrix over F_p with elimination-based rank, used for
/// Koszul differentials that exceed the dense threshold. Entries are fed as
/// (row, col, value) triplets.
class SparseRank {
public:
  SparseRank(const Fp& F, long long rows, long long cols) : F_(F), r_(rows), c_(cols) {}
  void add(long long row, long long col, uint32_t val);
  long long rank();

private:
  Fp F_;
  long long r_, c_;
  std::vector<std::tuple<long long, long long, uint32_t>> trip_;
};

}  // namespace sforge
