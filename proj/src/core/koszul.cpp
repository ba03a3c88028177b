#include "core/koszul.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "core/errors.hpp"
#include "core/hilbert.hpp"
#include "core/rng.hpp"

namespace sforge {

namespace {

// ---- certified depth reduction --------------------------------------------

struct Reduction {
  Ideal J;
  HilbertData hd;
  int cuts = 0;
};

// Substitute away random linear forms for as long as each substitution keeps
// the Hilbert numerator fixed.  The numerator of S/(I + l) over the smaller
// ring equals the numerator of S/I exactly when multiplication by l is
// injective on S/I, so every accepted cut is a certified non-zerodivisor and
// preserves all graded Betti numbers.  The random seed is fixed: the window
// a caller gets must not depend on anything outside the ideal.
Reduction reduce_by_nzd(const Ideal& I, const Caps& caps) {
  Reduction red{I, hilbert_data(I, caps), 0};
  Rng rng(0x6b6f737a756cULL);
  while (red.hd.krull_dim > 0 && red.J.nvars() > 1) {
    const Fp F = red.J.ring().F;
    const int n = red.J.nvars();
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      std::vector<uint32_t> ell(size_t(n), 0);
      int pivot = -1;
      for (int u = 0; u < n; ++u) {
        ell[size_t(u)] = rng.fp_elem(F);
        if (ell[size_t(u)] != 0) pivot = u;
      }
      if (pivot < 0) continue;
      // x_pivot := -(sum of the other terms of l) / l_pivot, then drop x_pivot.
      std::vector<std::vector<uint32_t>> M(size_t(n), std::vector<uint32_t>(size_t(n - 1), 0));
      const uint32_t inv = F.inv(ell[size_t(pivot)]);
      for (int u = 0; u < n; ++u) {
        if (u == pivot) continue;
        const int col = u < pivot ? u : u - 1;
        M[size_t(u)][size_t(col)] = 1;
        M[size_t(pivot)][size_t(col)] = F.neg(F.mul(ell[size_t(u)], inv));
      }
      std::vector<Poly> gens;
      gens.reserve(red.J.gens().size());
      for (const Poly& g : red.J.gens())
        gens.push_back(poly_compose_linear(F, Order::grevlex(), g, M, n - 1));
      Ideal Jc(Ring(F, n - 1), std::move(gens));
      HilbertData hc = hilbert_data(Jc, caps);
      if (tpoly_equal(hc.numerator, red.hd.numerator)) {
        red.J = std::move(Jc);
        red.hd = std::move(hc);
        ++red.cuts;
        found = true;
      }
    }
    if (!found) break;  // depth exhausted (or repeated bad luck): stop honestly
  }
  return red;
}

// ---- Koszul strand ranks ---------------------------------------------------

using SparseVec = std::vector<std::pair<int, uint32_t>>;  // (index, coeff)

struct KoszulEngine {
  Fp F;
  int n = 0;     // surviving variables = dim V
  int jmax = 0;  // slices 0..jmax+1 are materialized
  Caps caps;

  std::vector<std::vector<Mono>> basis;        // degree -> standard monomials
  std::vector<std::map<Mono, int>> basis_pos;  // degree -> monomial -> index
  // mult[d][u][k] = normal form of x_k * basis[d][u] over basis[d+1]
  std::vector<std::vector<std::vector<SparseVec>>> mult;
  std::vector<std::vector<std::vector<int>>> wedge;  // size -> ascending subsets
  std::vector<std::map<std::vector<int>, int>> wedge_pos;
  std::map<std::pair<int, int>, long long> ranks;

  KoszulEngine(const Ideal& J, int imax, int jm, const Caps& c)
      : F(J.ring().F), n(J.nvars()), jmax(jm), caps(c) {
    const std::vector<Mono> leads = J.lead_monomials(caps);
    basis.resize(size_t(jmax) + 2);
    basis_pos.resize(size_t(jmax) + 2);
    for (int d = 0; d <= jmax + 1; ++d) {
      if (count_monomials(n, d) > caps.max_matrix) {
        std::ostringstream os;
        os << "koszul: ambient slice of degree " << d << " has " << count_monomials(n, d)
           << " monomials in " << n << " variables, above the matrix cap " << caps.max_matrix;
        throw CapExceeded(os.str());
      }
      for (const Mono& m : monomials_of_degree(n, d, Order::grevlex())) {
        bool standard = true;
        for (const Mono& l : leads) {
          if (mono_divides(l.data(), m.data(), n)) {
            standard = false;
            break;
          }
        }
        if (standard) {
          basis_pos[size_t(d)][m] = int(basis[size_t(d)].size());
          basis[size_t(d)].push_back(m);
        }
      }
    }
    mult.resize(size_t(jmax) + 1);
    for (int d = 0; d <= jmax; ++d) {
      const auto& from = basis[size_t(d)];
      const auto& topos = basis_pos[size_t(d) + 1];
      mult[size_t(d)].assign(from.size(), std::vector<SparseVec>(size_t(n)));
      for (size_t u = 0; u < from.size(); ++u) {
        for (int k = 0; k < n; ++k) {
          Mono m = from[u];
          m[size_t(k)] = Exp(m[size_t(k)] + 1);
          auto it = topos.find(m);
          SparseVec& out = mult[size_t(d)][u][size_t(k)];
          if (it != topos.end()) {
            out.emplace_back(it->second, 1);
            continue;
          }
          Poly f(n);
          f.push_term(1, m);
          f.normalize(F, Order::grevlex());
          const Poly r = J.reduce(f, caps);
          for (int t = 0; t < r.nterms(); ++t) {
            Mono rm(r.mono(t), r.mono(t) + n);
            out.emplace_back(topos.at(rm), r.coeff(t));
          }
        }
      }
    }
    const int wmax = std::min(imax + 1, n);
    wedge.resize(size_t(wmax) + 1);
    wedge_pos.resize(size_t(wmax) + 1);
    std::vector<int> cur;
    for (int i = 0; i <= wmax; ++i) enumerate(i, 0, cur);
  }

  void enumerate(int want, int start, std::vector<int>& cur) {
    if (int(cur.size()) == want) {
      wedge_pos[size_t(want)][cur] = int(wedge[size_t(want)].size());
      wedge[size_t(want)].push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      enumerate(want, v + 1, cur);
      cur.pop_back();
    }
  }

  long long slice_dim(int j) const {
    if (j < 0 || j > jmax + 1) return 0;
    return (long long)basis[size_t(j)].size();
  }

  // rank of the strand map  Λ^i V ⊗ M_j  ->  Λ^{i-1} V ⊗ M_{j+1}.
  long long rank_delta(int i, int j) {
    if (i <= 0 || i > n || j < 0 || j > jmax) return 0;
    const long long mj = slice_dim(j), mj1 = slice_dim(j + 1);
    const long long rows = binom(n, i) * mj;
    const long long cols = binom(n, i - 1) * mj1;
    if (rows == 0 || cols == 0) return 0;
    const auto key = std::make_pair(i, j);
    auto hit = ranks.find(key);
    if (hit != ranks.end()) return hit->second;
    if (rows > caps.max_matrix / (cols > 0 ? cols : 1)) {
      std::ostringstream os;
      os << "koszul: strand block at column " << i << ", row " << j << " is " << rows << " x "
         << cols << " = " << double(rows) * double(cols) << " entries, above the matrix cap "
         << caps.max_matrix;
      throw CapExceeded(os.str());
    }
    const auto& dom_w = wedge[size_t(i)];
    const auto& cod_pos = wedge_pos[size_t(i) - 1];
    const bool dense = rows * cols < 512 * 512;
    MatFp A;
    if (dense) A = MatFp(int(rows), int(cols));
    SparseRank sr(F, rows, cols);
    std::vector<int> sub;
    sub.reserve(size_t(i) - 1);
    for (size_t wi = 0; wi < dom_w.size(); ++wi) {
      const std::vector<int>& w = dom_w[wi];
      for (size_t t = 0; t < w.size(); ++t) {
        sub.assign(w.begin(), w.end());
        sub.erase(sub.begin() + long(t));
        const long long wt = cod_pos.at(sub);
        const bool flip = (t % 2) != 0;  // sign (-1)^t for dropping position t
        for (long long u = 0; u < mj; ++u) {
          const long long row = (long long)wi * mj + u;
          for (const auto& [vidx, c] : mult[size_t(j)][size_t(u)][size_t(w[t])]) {
            const uint32_t val = flip ? F.neg(c) : c;
            const long long col = wt * mj1 + vidx;
            if (dense)
              A.at(int(row), int(col)) = F.add(A.at(int(row), int(col)), val);
            else
              sr.add(row, col, val);
          }
        }
      }
    }
    const long long r = dense ? mat_rank(F, A) : sr.rank();
    ranks[key] = r;
    return r;
  }
};

}  // namespace

BettiWindow koszul_betti(const Ideal& I, int imax, int jmax, const Caps& caps) {
  if (imax < 0 || jmax < 0) throw DomainError("koszul_betti: window bounds must be nonnegative");
  const Reduction red = reduce_by_nzd(I, caps);

  BettiWindow B;
  B.imax = imax;
  B.jmax = jmax;
  B.prime = I.ring().F.p();
  B.depth_cut = red.cuts;
  B.reduced_vars = red.J.nvars();
  B.artinian = red.hd.krull_dim <= 0;
  B.top_nonzero_slice = B.artinian ? int(tpoly_trim(red.hd.reduced).size()) - 1 : -1;
  B.beta.assign(size_t(imax) + 1, std::vector<long long>(size_t(jmax) + 1, 0));

  KoszulEngine eng(red.J, imax, jmax, caps);
  for (int i = 0; i <= imax; ++i) {
    for (int j = 0; j <= jmax; ++j) {
      const long long mid = i <= eng.n ? binom(eng.n, i) * eng.slice_dim(j) : 0;
      if (mid == 0) continue;
      B.beta[size_t(i)][size_t(j)] = mid - eng.rank_delta(i, j) - eng.rank_delta(i + 1, j - 1);
    }
  }
  return B;
}

namespace {

// The window provably contains every nonzero table entry: an Artinian
// reduction bounds the rows (slices above the top one are zero) and the
// syzygy theorem over the reduced ring bounds the columns.
bool window_complete(const BettiWindow& B) {
  return B.artinian && B.jmax >= B.top_nonzero_slice && B.imax >= B.reduced_vars;
}

}  // namespace

WindowBound regularity(const BettiWindow& B) {
  int maxrow = -1;
  for (int j = 0; j <= B.jmax; ++j)
    for (int i = 0; i <= B.imax; ++i)
      if (B.at(i, j) != 0) maxrow = std::max(maxrow, j);
  return WindowBound{maxrow + 1, window_complete(B)};
}

WindowBound strand_length(const BettiWindow& B, int q) {
  WindowBound out;
  if (q < 0 || q > B.jmax) return out;  // row not in the window: nothing provable
  for (int i = 0; i <= B.imax; ++i)
    if (B.at(i, q) != 0) out.value = i;
  out.certified = B.imax >= B.reduced_vars;
  return out;
}

PropertyN property_N(const BettiWindow& B, int d, int p) {
  PropertyN out;
  for (int i = 0; i <= std::min(p, B.imax); ++i) {
    for (int j = std::max(d, 0); j <= B.jmax; ++j) {
      if (B.at(i, j) != 0) {
        out.holds = false;
        out.certified = true;  // a nonzero witness settles it regardless of truncation
        return out;
      }
    }
  }
  out.holds = true;
  out.certified = B.artinian && B.jmax >= B.top_nonzero_slice &&
                  std::min(p, B.reduced_vars) <= B.imax;
  return out;
}

std::vector<long long> alternating_sums(const BettiWindow& B) {
  std::vector<long long> out;
  for (int j = 0; j <= B.jmax + 1; ++j) {
    // Complete iff every potentially nonzero beta_{i,j-i} is readable: columns
    // above reduced_vars vanish, row j at column 0 vanishes for j > 0 because
    // the quotient is cyclic, and rows j-i with i >= 1 must fit the window.
    if (std::min(j, B.reduced_vars) > B.imax) break;
    long long s = 0;
    for (int i = 0; i <= std::min({j, B.imax, B.reduced_vars}); ++i) {
      const int row = j - i;
      if (row <= B.jmax) s += (i % 2 ? -1 : 1) * B.at(i, row);
    }
    out.push_back(s);
  }
  return out;
}

std::string betti_table_string(const BettiWindow& B) {
  std::vector<size_t> width(size_t(B.imax) + 1, 1);
  for (int i = 0; i <= B.imax; ++i)
    for (int j = 0; j <= B.jmax; ++j)
      width[size_t(i)] = std::max(width[size_t(i)], std::to_string(B.at(i, j)).size());
  std::ostringstream os;
  size_t label = std::to_string(B.jmax).size() + 1;
  os << std::string(label + 1, ' ');
  for (int i = 0; i <= B.imax; ++i) {
    std::string h = std::to_string(i);
    os << std::string(width[size_t(i)] + 2 - h.size(), ' ') << h;
  }
  os << '\n';
  for (int j = 0; j <= B.jmax; ++j) {
    std::string h = std::to_string(j);
    os << std::string(label - h.size(), ' ') << h << ':';
    for (int i = 0; i <= B.imax; ++i) {
      std::string cell = B.at(i, j) == 0 ? "-" : std::to_string(B.at(i, j));
      os << std::string(width[size_t(i)] + 2 - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sforge
