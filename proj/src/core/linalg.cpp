#include "core/linalg.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace sforge {

void MatFp::append_row(const std::vector<uint32_t>& v) {
  if (int(v.size()) != c_) throw DomainError("append_row: wrong width");
  a_.insert(a_.end(), v.begin(), v.end());
  ++r_;
}

namespace {

// rows[i] -= c * rows[k], on raw rows of width w, from column `from`.
inline void row_axpy(const Fp& F, uint32_t* dst, const uint32_t* src, uint32_t c, int from,
                     int w) {
  if (c == 0) return;
  uint32_t nc = F.neg(c);
  for (int j = from; j < w; ++j) {
    if (src[j]) dst[j] = F.reduce(dst[j] + uint64_t(nc) * src[j]);
  }
}

}  // namespace

int row_echelon(const Fp& F, MatFp& m, std::vector<int>* pivot_cols) {
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  int R = m.rows(), C = m.cols();
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i) {
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = col; j < C; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    }
    uint32_t inv = F.inv(m.at(rank, col));
    if (inv != 1) {
      for (int j = col; j < C; ++j) m.at(rank, j) = F.mul(m.at(rank, j), inv);
    }
    for (int i = rank + 1; i < R; ++i) {
      uint32_t c = m.at(i, col);
      if (c) {
        row_axpy(F, m.row(i), m.row(rank), c, col, C);
        m.at(i, col) = 0;
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

int rref(const Fp& F, MatFp& m, std::vector<int>* pivot_cols) {
  std::vector<int> piv;
  int rank = row_echelon(F, m, &piv);
  for (int r = rank - 1; r >= 0; --r) {
    int col = piv[r];
    for (int i = 0; i < r; ++i) {
      uint32_t c = m.at(i, col);
      if (c) {
        row_axpy(F, m.row(i), m.row(r), c, col, m.cols());
        m.at(i, col) = 0;
      }
    }
  }
  if (pivot_cols) *pivot_cols = piv;
  return rank;
}

int mat_rank(const Fp& F, MatFp m) { return row_echelon(F, m); }

std::vector<std::vector<uint32_t>> mat_kernel(const Fp& F, MatFp m) {
  std::vector<int> piv;
  int rank = rref(F, m, &piv);
  int C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> out;
  for (int c = 0; c < C; ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint32_t> v(C, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) {
      if (m.at(r, c)) v[piv[r]] = F.neg(m.at(r, c));
    }
    out.push_back(std::move(v));
  }
  return out;
}

uint32_t mat_det(const Fp& F, MatFp m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  int n = m.rows();
  uint32_t det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(col, col));
    uint32_t inv = F.inv(m.at(col, col));
    for (int i = col + 1; i < n; ++i) {
      uint32_t c = m.at(i, col);
      if (c) row_axpy(F, m.row(i), m.row(col), F.mul(c, inv), col, n);
    }
  }
  return det;
}

MatFp mat_inverse(const Fp& F, const MatFp& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  int n = m.rows();
  MatFp aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  int rank = rref(F, aug, &piv);
  // Singular iff the LEFT block is rank-deficient; pivots then spill into
  // the identity block, so counting pivot columns < n is the right test.
  int left_rank = 0;
  for (int c : piv)
    if (c < n) ++left_rank;
  if (rank < n || left_rank != n) throw DomainError("matrix is singular");
  MatFp inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool mat_solve(const Fp& F, MatFp m, std::vector<uint32_t> b, std::vector<uint32_t>& x) {
  int R = m.rows(), C = m.cols();
  MatFp aug(R, C + 1);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, C) = b[i];
  }
  std::vector<int> piv;
  int rank = rref(F, aug, &piv);
  x.assign(C, 0);
  for (int r = 0; r < rank; ++r) {
    if (piv[r] == C) return false;  // 0 = nonzero
    x[piv[r]] = aug.at(r, C);
  }
  return true;
}

MatFp mat_mul(const Fp& F, const MatFp& a, const MatFp& b) {
  if (a.cols() != b.rows()) throw DomainError("mat_mul: shape mismatch");
  MatFp out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      uint32_t v = a.at(i, k);
      if (!v) continue;
      const uint32_t* brow = b.row(k);
      uint32_t* orow = out.row(i);
      for (int j = 0; j < b.cols(); ++j) {
        if (brow[j]) orow[j] = F.reduce(orow[j] + uint64_t(v) * brow[j]);
      }
    }
  }
  return out;
}

bool EchelonBuilder::add_row(std::vector<uint32_t> v) {
  v = reduce(std::move(v));
  int lead = -1;
  for (int j = 0; j < c_; ++j) {
    if (v[j]) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return false;
  uint32_t inv = F_.inv(v[lead]);
  if (inv != 1)
    for (int j = lead; j < c_; ++j) v[j] = F_.mul(v[j], inv);
  // Maintain a full reduced echelon: clear the new pivot column from every
  // stored row so reduce() stays a single deterministic pass.
  for (auto& row : rows_) {
    uint32_t c = row[lead];
    if (c) {
      row_axpy(F_, row.data(), v.data(), c, lead, c_);
      row[lead] = 0;
    }
  }
  size_t pos = 0;
  while (pos < piv_.size() && piv_[pos] < lead) ++pos;
  piv_.insert(piv_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

std::vector<uint32_t> EchelonBuilder::reduce(std::vector<uint32_t> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = v[piv_[r]];
    if (c) row_axpy(F_, v.data(), rows_[r].data(), c, piv_[r], c_);
    v[piv_[r]] = 0;
  }
  return v;
}

bool EchelonBuilder::coordinates(std::vector<uint32_t> v, std::vector<uint32_t>& coords) const {
  coords.assign(rows_.size(), 0);
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = v[piv_[r]];
    if (c) {
      coords[r] = c;
      row_axpy(F_, v.data(), rows_[r].data(), c, piv_[r], c_);
      v[piv_[r]] = 0;
    }
  }
  for (int j = 0; j < c_; ++j)
    if (v[j]) return false;
  return true;
}

void SparseRank::add(long long row, long long col, uint32_t val) {
  if (val) trip_.emplace_back(row, col, val);
}

long long SparseRank::rank() {
  // Left-looking sparse elimination: pivot columns are stored fully reduced
  // against earlier pivots, so reducing a fresh column in pivot order never
  // reintroduces an earlier pivot row.
  std::vector<std::vector<std::pair<long long, uint32_t>>> cols;
  cols.resize(static_cast<size_t>(c_));
  for (auto& [r, c, v] : trip_) cols[size_t(c)].emplace_back(r, v);
  trip_.clear();
  trip_.shrink_to_fit();

  std::vector<long long> order;
  order.reserve(cols.size());
  for (long long c = 0; c < c_; ++c)
    if (!cols[size_t(c)].empty()) order.push_back(c);
  std::sort(order.begin(), order.end(), [&](long long a, long long b) {
    size_t na = cols[size_t(a)].size(), nb = cols[size_t(b)].size();
    return na != nb ? na < nb : a < b;
  });

  std::unordered_map<long long, long long> pivot_index_of_row;
  std::vector<std::vector<std::pair<long long, uint32_t>>> pivcols;
  std::unordered_map<long long, uint32_t> acc;

  for (long long c : order) {
    acc.clear();
    for (auto& [r, v] : cols[size_t(c)]) {
      uint32_t s = F_.add(acc[r], v);
      if (s)
        acc[r] = s;
      else
        acc.erase(r);
    }
    cols[size_t(c)].clear();
    cols[size_t(c)].shrink_to_fit();
    // Reduce against pivots in increasing pivot order.
    while (true) {
      long long best = -1;
      long long best_row = -1;
      for (auto& [r, v] : acc) {
        auto it = pivot_index_of_row.find(r);
        if (it != pivot_index_of_row.end() && (best < 0 || it->second < best)) {
          best = it->second;
          best_row = r;
        }
      }
      if (best < 0) break;
      uint32_t c0 = acc[best_row];
      for (auto& [r, v] : pivcols[size_t(best)]) {
        uint32_t delta = F_.mul(c0, v);
        uint32_t s = F_.sub(acc.count(r) ? acc[r] : 0, delta);
        if (s)
          acc[r] = s;
        else
          acc.erase(r);
      }
    }
    if (acc.empty()) continue;
    // New pivot: monic on its (deterministically chosen) smallest row index.
    long long prow = -1;
    for (auto& [r, v] : acc)
      if (prow < 0 || r < prow) prow = r;
    uint32_t inv = F_.inv(acc[prow]);
    std::vector<std::pair<long long, uint32_t>> stored;
    stored.reserve(acc.size());
    for (auto& [r, v] : acc) stored.emplace_back(r, F_.mul(v, inv));
    std::sort(stored.begin(), stored.end());
    pivot_index_of_row[prow] = (long long)pivcols.size();
    pivcols.push_back(std::move(stored));
  }
  return (long long)pivcols.size();
}

}  // namespace sforge
