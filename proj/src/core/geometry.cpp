#include "core/geometry.hpp"

#include <algorithm>
#include <utility>

#include "core/errors.hpp"

namespace sforge {

namespace {

Point random_point(const Fp& F, int n, Rng& rng) {
  for (;;) {
    Point y(size_t(n), 0);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      y[size_t(i)] = rng.fp_elem(F);
      nonzero = nonzero || y[size_t(i)] != 0;
    }
    if (nonzero) return y;
  }
}

bool proportional(const Fp& F, const Point& a, const Point& b) {
  size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  if (i == a.size()) return true;  // a == 0
  if (b[i] == 0) {
    // b could still be zero everywhere a is nonzero only if b is not a
    // multiple of a — unless b == 0.
    for (uint32_t c : b)
      if (c != 0) return false;
    return true;
  }
  uint32_t lambda = F.div(b[i], a[i]);
  for (size_t j = 0; j < a.size(); ++j)
    if (F.mul(lambda, a[j]) != b[j]) return false;
  return true;
}

/// Values of every monomial in `ix` at the point w, in index order.
std::vector<uint32_t> monomial_row(const Fp& F, const MonomialIndex& ix, int n, int d,
                                   const Point& w) {
  std::vector<uint32_t> pw(size_t(n) * size_t(d + 1), 1);
  for (int i = 0; i < n; ++i)
    for (int e = 1; e <= d; ++e)
      pw[size_t(i) * size_t(d + 1) + size_t(e)] =
          F.mul(pw[size_t(i) * size_t(d + 1) + size_t(e - 1)], w[size_t(i)]);
  std::vector<uint32_t> row(size_t(ix.size()), 0);
  const auto& monos = ix.list();
  for (size_t k = 0; k < monos.size(); ++k) {
    uint32_t v = 1;
    for (int i = 0; i < n; ++i) {
      Exp e = monos[k][size_t(i)];
      if (e) v = F.mul(v, pw[size_t(i) * size_t(d + 1) + size_t(e)]);
    }
    row[k] = v;
  }
  return row;
}

constexpr int kRetryBudget = 256;

}  // namespace

// ---------------------------------------------------------------- LinearSpace

LinearSpace LinearSpace::from_points(const Ring& R, const std::vector<Point>& pts) {
  int n = R.nvars;
  MatFp M(int(pts.size()), n);
  for (size_t i = 0; i < pts.size(); ++i) {
    if (int(pts[i].size()) != n) throw DomainError("LinearSpace: point has wrong length");
    for (int j = 0; j < n; ++j) M.at(int(i), j) = pts[i][size_t(j)];
  }
  int rank = row_echelon(R.F, M);
  if (rank == 0) throw DomainError("LinearSpace: empty span");
  LinearSpace L;
  L.ring_ = R;
  for (int i = 0; i < rank; ++i)
    L.pts_.emplace_back(M.row(i), M.row(i) + n);
  L.forms_ = mat_kernel(R.F, M);
  return L;
}

LinearSpace LinearSpace::from_form_rows(const Ring& R,
                                        const std::vector<std::vector<uint32_t>>& rows) {
  int n = R.nvars;
  MatFp M(int(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != n) throw DomainError("LinearSpace: form row has wrong length");
    for (int j = 0; j < n; ++j) M.at(int(i), j) = rows[i][size_t(j)];
  }
  int rank = row_echelon(R.F, M);
  LinearSpace L;
  L.ring_ = R;
  for (int i = 0; i < rank; ++i)
    L.forms_.emplace_back(M.row(i), M.row(i) + n);
  L.pts_ = mat_kernel(R.F, M);
  if (L.pts_.empty()) throw DomainError("LinearSpace: forms have no common projective zero");
  return L;
}

std::vector<Poly> LinearSpace::forms() const {
  std::vector<Poly> out;
  int n = ring_.nvars;
  for (const auto& row : forms_) {
    Poly f(n);
    Mono m(size_t(n), 0);
    for (int j = 0; j < n; ++j) {
      if (row[size_t(j)] == 0) continue;
      m[size_t(j)] = 1;
      f.push_term(row[size_t(j)], m);
      m[size_t(j)] = 0;
    }
    f.normalize(ring_.F, Order::grevlex());
    out.push_back(std::move(f));
  }
  return out;
}

bool LinearSpace::contains(const Point& pt) const {
  if (int(pt.size()) != ring_.nvars) throw DomainError("LinearSpace: point has wrong length");
  for (const auto& row : forms_) {
    uint64_t acc = 0;
    for (size_t j = 0; j < pt.size(); ++j) {
      acc += uint64_t(ring_.F.mul(row[j], pt[j]));
      if (acc >= (uint64_t(1) << 63)) acc %= ring_.F.p();
    }
    if (acc % ring_.F.p() != 0) return false;
  }
  return true;
}

// ------------------------------------------------------------------- helpers

bool point_on_ideal(const Ideal& I, const Point& z) {
  if (int(z.size()) != I.nvars()) throw DomainError("point_on_ideal: wrong coordinate count");
  const Fp& F = I.ring().F;
  for (const Poly& g : I.gens())
    if (poly_eval(F, g, z) != 0) return false;
  return true;
}

// ------------------------------------------------------------ secant (elim)

Ideal secant_ideal_elim(const Variety& X, int q, const Caps& caps) {
  const Ring& R = X.ideal.ring();
  const Fp& F = R.F;
  int n = R.nvars;
  if (q < 0) throw DomainError("secant_ideal_elim: q must be >= 0");
  if (q == 0) return irrelevant_ideal(R);
  if (q == 1) return X.ideal;

  // Join ring: q-1 auxiliary blocks first, then the original block, so the
  // elimination of the auxiliaries renames the survivors back to x0..x_{n-1}.
  int nvj = q * n;
  Ring Rj(F, nvj);
  const Order& ord = Order::grevlex();
  std::vector<Poly> gens;

  for (int b = 0; b + 1 < q; ++b) {
    std::vector<int> var_map(size_t(n), 0);
    for (int i = 0; i < n; ++i) var_map[size_t(i)] = b * n + i;
    for (const Poly& g : X.ideal.gens())
      gens.push_back(poly_rename_vars(g, var_map, nvj, F, ord));
  }

  // x - sum of the auxiliary blocks.
  std::vector<std::vector<uint32_t>> M(size_t(n), std::vector<uint32_t>(size_t(nvj), 0));
  uint32_t minus_one = F.neg(1);
  for (int i = 0; i < n; ++i) {
    M[size_t(i)][size_t((q - 1) * n + i)] = 1;
    for (int b = 0; b + 1 < q; ++b) M[size_t(i)][size_t(b * n + i)] = minus_one;
  }
  for (const Poly& g : X.ideal.gens())
    gens.push_back(poly_compose_linear(F, ord, g, M, nvj));

  Ideal J(Rj, std::move(gens));
  std::vector<int> drop(size_t((q - 1) * n));
  for (int i = 0; i < (q - 1) * n; ++i) drop[size_t(i)] = i;
  return eliminate(J, drop, caps);
}

// ---------------------------------------------------------- secant (interp)

Ideal secant_ideal_interp(const Variety& X, int q, int dmax, Rng& rng, const Caps& caps) {
  const Ring& R = X.ideal.ring();
  const Fp& F = R.F;
  int n = R.nvars;
  if (q < 0) throw DomainError("secant_ideal_interp: q must be >= 0");
  if (q == 0) return irrelevant_ideal(R);
  if (!X.param) throw DomainError("secant_ideal_interp: variety carries no parametrization");
  if (dmax < 1) throw DomainError("secant_ideal_interp: dmax must be >= 1");

  std::vector<Poly> found;       // minimal generators recovered so far
  std::optional<Ideal> J;        // ideal they generate (rebuilt when they grow)

  for (int d = 1; d <= dmax; ++d) {
    long long m = count_monomials(n, d);
    long long rows0 = m + 32;
    if (rows0 * m > caps.max_matrix)
      throw CapExceeded("interpolation matrix " + std::to_string(rows0) + " x " +
                        std::to_string(m) + " exceeds max_matrix in degree " + std::to_string(d));
    MonomialIndex ix(n, d);

    MatFp E(0, int(m));
    auto append_sample_rows = [&](long long count) {
      for (long long i = 0; i < count; ++i) {
        Point w = sample_secant_point(X, q, rng);
        E.append_row(monomial_row(F, ix, n, d, w));
      }
    };
    append_sample_rows(rows0);
    std::vector<std::vector<uint32_t>> kernel = mat_kernel(F, E);

    bool stable = kernel.empty();
    const int kMaxRounds = 8;
    for (int round = 0; round < kMaxRounds && !stable; ++round) {
      // Fresh verification batch: 25% more samples. The slice is accepted
      // only if every kernel vector vanishes on every fresh sample, i.e.
      // the enlarged matrix has the same kernel.
      long long extra = (E.rows() + 3) / 4;
      if ((E.rows() + extra) * m > caps.max_matrix)
        throw CapExceeded("interpolation stabilization exceeds max_matrix in degree " +
                          std::to_string(d));
      std::vector<std::vector<uint32_t>> fresh;
      fresh.reserve(size_t(extra));
      for (long long i = 0; i < extra; ++i) {
        Point w = sample_secant_point(X, q, rng);
        fresh.push_back(monomial_row(F, ix, n, d, w));
      }
      bool all_vanish = true;
      for (const auto& row : fresh) {
        for (const auto& v : kernel) {
          uint64_t acc = 0;
          for (long long j = 0; j < m; ++j) {
            acc += uint64_t(F.mul(row[size_t(j)], v[size_t(j)]));
            if (acc >= (uint64_t(1) << 63)) acc %= F.p();
          }
          if (acc % F.p() != 0) {
            all_vanish = false;
            break;
          }
        }
        if (!all_vanish) break;
      }
      if (all_vanish) {
        stable = true;
      } else {
        for (auto& row : fresh) E.append_row(row);
        kernel = mat_kernel(F, E);
        stable = kernel.empty();
      }
    }
    if (!stable)
      throw SamplingError("interpolation kernel failed to stabilize in degree " +
                          std::to_string(d));
    if (kernel.empty()) continue;

    // Keep only vectors independent from the slice already generated.
    EchelonBuilder eb(F, int(m));
    if (J) {
      GradedPiece gp = graded_piece(*J, d, caps);
      for (const Poly& b : gp.basis) eb.add_row(poly_to_vector(b, ix));
    }
    bool grew = false;
    for (auto& v : kernel) {
      std::vector<uint32_t> copy = v;
      if (eb.add_row(std::move(copy))) {
        found.push_back(vector_to_poly(v, ix, n, F, Order::grevlex()));
        grew = true;
      }
    }
    if (grew) J.emplace(R, found);
  }
  return J ? *J : Ideal(R, {});
}

// ------------------------------------------------------------ tangent space

LinearSpace tangent_space(const Variety& X, const Point& z) {
  const Ring& R = X.ideal.ring();
  const Fp& F = R.F;
  int n = R.nvars;
  if (!point_on_ideal(X.ideal, z)) throw DomainError("tangent_space: point is not on the variety");
  std::vector<std::vector<uint32_t>> rows;
  for (const Poly& g : X.ideal.gens()) {
    std::vector<uint32_t> row(size_t(n), 0);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      row[size_t(j)] = poly_eval(F, poly_derivative(F, g, j), z);
      nonzero = nonzero || row[size_t(j)] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    // No constraints: the tangent space is the whole ambient space.
    std::vector<Point> basis;
    for (int i = 0; i < n; ++i) {
      Point e(size_t(n), 0);
      e[size_t(i)] = 1;
      basis.push_back(std::move(e));
    }
    return LinearSpace::from_points(R, basis);
  }
  return LinearSpace::from_form_rows(R, rows);
}

// --------------------------------------------------------- linear projection

MatFp projection_frame(const Fp& F, const LinearSpace& L) {
  int n = L.nvars();
  int lam1 = int(L.points().size());
  // Invertible A whose first lam1 columns span L; remaining columns are
  // standard basis vectors chosen greedily to keep full rank.
  EchelonBuilder eb(F, n);
  for (const Point& pt : L.points()) eb.add_row(pt);
  std::vector<int> extras;
  for (int j = 0; j < n && int(extras.size()) < n - lam1; ++j) {
    std::vector<uint32_t> e(size_t(n), 0);
    e[size_t(j)] = 1;
    if (eb.add_row(std::move(e))) extras.push_back(j);
  }
  MatFp A(n, n);
  for (int k = 0; k < lam1; ++k)
    for (int i = 0; i < n; ++i) A.at(i, k) = L.points()[size_t(k)][size_t(i)];
  for (size_t t = 0; t < extras.size(); ++t) A.at(extras[t], lam1 + int(t)) = 1;
  return A;
}

Ideal linear_projection(const Ideal& I, const LinearSpace& L, const Caps& caps) {
  const Ring& R = I.ring();
  const Fp& F = R.F;
  int n = R.nvars;
  if (L.nvars() != n) throw DomainError("linear_projection: center lives in a different ring");
  int lam1 = int(L.points().size());  // dim L + 1
  if (lam1 <= 0) throw DomainError("linear_projection: empty center");
  if (n - lam1 < 2)
    throw DomainError("linear_projection: target must have projective dimension >= 1");

  MatFp A = projection_frame(F, L);
  Ideal J = ideal_linear_change(I, A, caps);
  std::vector<int> drop(size_t(lam1), 0);
  for (int i = 0; i < lam1; ++i) drop[size_t(i)] = i;
  return eliminate(J, drop, caps);
}

// ------------------------------------------------------------------ sampling

namespace {

/// Rational points of the plane curve C on the line through a, b, found by
/// scanning the binary form C(s*a + t*b) for roots (t affine, then t = inf).
std::vector<Point> curve_points_on_line(const Fp& F, const Poly& C, const Point& a,
                                        const Point& b) {
  int d = C.deg();
  std::vector<std::vector<uint32_t>> M(3, std::vector<uint32_t>(2, 0));
  for (int i = 0; i < 3; ++i) {
    M[size_t(i)][0] = a[size_t(i)];
    M[size_t(i)][1] = b[size_t(i)];
  }
  Poly bin = poly_compose_linear(F, Order::grevlex(), C, M, 2);
  if (bin.zero()) return {};  // line inside the curve: useless for sampling
  std::vector<uint32_t> c(size_t(d + 1), 0);  // c[k] multiplies s^(d-k) t^k
  for (int i = 0; i < bin.nterms(); ++i) c[size_t(bin.mono(i)[1])] = bin.coeff(i);

  std::vector<Point> out;
  for (uint64_t t = 0; t < F.p(); ++t) {
    uint32_t tv = uint32_t(t);
    uint32_t v = c[size_t(d)];
    for (int k = d - 1; k >= 0; --k) v = F.add(F.mul(v, tv), c[size_t(k)]);
    if (v == 0) {
      Point y(3);
      for (int i = 0; i < 3; ++i) y[size_t(i)] = F.add(a[size_t(i)], F.mul(tv, b[size_t(i)]));
      out.push_back(std::move(y));
    }
  }
  if (c[size_t(d)] == 0) out.push_back(b);  // t = infinity
  return out;
}

}  // namespace

Point sample_point(const Variety& X, Rng& rng) {
  if (!X.param) throw DomainError("sample_point: variety carries no parametrization");
  const Parametrization& pm = *X.param;
  const Fp& F = pm.source.F;
  int ms = pm.source.nvars;
  int nt = int(pm.comps.size());

  auto image_of = [&](const Point& y) -> Point {
    Point x(size_t(nt), 0);
    for (int i = 0; i < nt; ++i) x[size_t(i)] = poly_eval(F, pm.comps[size_t(i)], y);
    return x;
  };
  auto accept = [&](const Point& x) {
    bool nonzero = false;
    for (uint32_t c : x) nonzero = nonzero || c != 0;
    if (!nonzero) return false;
    if (!point_on_ideal(X.ideal, x))
      throw DomainError("sample_point: parametrization image violates the ideal");
    return true;
  };

  if (pm.constraints.empty()) {
    for (int it = 0; it < kRetryBudget; ++it) {
      Point x = image_of(random_point(F, ms, rng));
      if (accept(x)) return x;
    }
    throw SamplingError("sample_point: no usable image after " + std::to_string(kRetryBudget) +
                        " draws (" + X.label + ")");
  }

  if (ms != 3 || pm.constraints.size() != 1)
    throw DomainError("sample_point: only a single plane-curve source constraint is supported");
  const Poly& C = pm.constraints[0];
  for (int it = 0; it < kRetryBudget; ++it) {
    Point a = random_point(F, 3, rng);
    Point b = random_point(F, 3, rng);
    if (proportional(F, a, b)) continue;
    std::vector<Point> ys = curve_points_on_line(F, C, a, b);
    if (ys.empty()) continue;
    size_t start = size_t(rng.below(ys.size()));
    for (size_t k = 0; k < ys.size(); ++k) {
      Point x = image_of(ys[(start + k) % ys.size()]);
      if (accept(x)) return x;
    }
  }
  throw SamplingError("sample_point: no rational curve point after " +
                      std::to_string(kRetryBudget) + " lines (" + X.label + ")");
}

Point sample_secant_point(const Variety& X, int q, Rng& rng) {
  if (q < 1) throw DomainError("sample_secant_point: q must be >= 1");
  const Fp& F = X.ideal.ring().F;
  int n = X.ideal.nvars();
  for (int it = 0; it < kRetryBudget; ++it) {
    std::vector<Point> pts;
    bool ok = true;
    for (int i = 0; i < q && ok; ++i) {
      Point p = sample_point(X, rng);
      for (const Point& prev : pts)
        if (proportional(F, prev, p)) {
          ok = false;
          break;
        }
      if (ok) pts.push_back(std::move(p));
    }
    if (!ok) continue;
    Point w(size_t(n), 0);
    for (const Point& p : pts) {
      uint32_t c = rng.fp_nonzero(F);
      for (int j = 0; j < n; ++j)
        w[size_t(j)] = F.add(w[size_t(j)], F.mul(c, p[size_t(j)]));
    }
    bool nonzero = false;
    for (uint32_t c : w) nonzero = nonzero || c != 0;
    if (nonzero) return w;
  }
  throw SamplingError("sample_secant_point: retry budget exhausted (" + X.label + ")");
}

}  // namespace sforge
