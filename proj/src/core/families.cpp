// Families of projective varieties used throughout the library: rational
// normal curves and scrolls, Veronese embeddings, plane-curve models
// (trigonal genus 3, one-nodal genus 2, elliptic), the Pluecker-embedded
// Grassmannian of lines, catalecticant determinantal loci, seeded linear
// projections, and a characteristic-2 determinantal fourfold.  Each builder
// returns the full homogeneous ideal and, where one exists, a polynomial
// parametrization suitable for point sampling and interpolation.
#include "core/families.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/hilbert.hpp"
#include "core/linalg.hpp"

namespace sforge {

namespace {

// x_a * x_b - x_c * x_d in an nv-variable ring.
Poly quad_minor(const Fp& F, int nv, int a, int b, int c, int d) {
  const Order ord = Order::grevlex();
  return poly_sub(F, ord, poly_mul(F, ord, poly_var(nv, a), poly_var(nv, b)),
                  poly_mul(F, ord, poly_var(nv, c), poly_var(nv, d)));
}

// The monomial with the given exponent vector, coefficient 1.
Poly mono_poly(const Mono& m) {
  return poly_from_raw(int(m.size()), {1}, std::vector<Exp>(m.begin(), m.end()));
}

// Uniformly random form of degree d (may be zero; callers retry).
Poly random_form(const Fp& F, int nv, int d, Rng& rng) {
  MonomialIndex ix(nv, d);
  std::vector<uint32_t> v(size_t(ix.size()), 0);
  for (auto& c : v) c = rng.fp_elem(F);
  return vector_to_poly(v, ix, nv, F, Order::grevlex());
}

// Nonzero point of P^{n-1} with uniform coordinates.
Point random_proj_point(const Fp& F, int n, Rng& rng) {
  for (int tries = 0; tries < 4096; ++tries) {
    Point z(size_t(n), 0);
    bool nonzero = false;
    for (auto& c : z) {
      c = rng.fp_elem(F);
      nonzero = nonzero || c != 0;
    }
    if (nonzero) return z;
  }
  throw SamplingError("random_proj_point: exhausted retries");
}

uint32_t mono_eval(const Fp& F, const Mono& m, const Point& z) {
  uint32_t r = 1;
  for (size_t i = 0; i < m.size(); ++i)
    for (Exp e = 0; e < m[i]; ++e) r = F.mul(r, z[i]);
  return r;
}

// Basis of the degree-d forms on P^{nv-1} vanishing at every given point.
std::vector<Poly> forms_through(const Fp& F, int nv, int d,
                                const std::vector<Point>& pts) {
  MonomialIndex ix(nv, d);
  MatFp M(0, int(ix.size()));
  for (const Point& z : pts) {
    std::vector<uint32_t> row(size_t(ix.size()), 0);
    for (long long j = 0; j < ix.size(); ++j)
      row[size_t(j)] = mono_eval(F, ix.list()[size_t(j)], z);
    M.append_row(row);
  }
  std::vector<Poly> out;
  for (auto& v : mat_kernel(F, M))
    out.push_back(vector_to_poly(v, ix, nv, F, Order::grevlex()));
  return out;
}

// A plane curve C = 0 is smooth iff C and its three partials have no common
// projective zero, i.e. the quotient by the Jacobian ideal is Artinian.
bool plane_curve_smooth(const Fp& F, const Poly& C, const Caps& caps) {
  Ring R(F, 3);
  std::vector<Poly> gens{C};
  for (int i = 0; i < 3; ++i) gens.push_back(poly_derivative(F, C, i));
  return hilbert_data(Ideal(R, gens), caps).krull_dim == 0;
}

// Ideal of the closure of the image of the rational map given by `sys`
// (forms of one common degree on the source projective space, restricted to
// the zero locus of `constraints`): put the source variables first, adjoin
// one target variable per component, record the graph z_j - Q_j(y), and
// eliminate the source block.  The graph ideal is homogeneous for the
// weighting (y_i -> 1, z_j -> deg Q), so the eliminated ideal comes out
// standard-homogeneous in the target variables alone.
Ideal graph_image(const Fp& F, int sn, const std::vector<Poly>& constraints,
                  const std::vector<Poly>& sys, const Caps& caps) {
  const Order ord = Order::grevlex();
  int m = int(sys.size());
  if (m < 2) throw DomainError("graph_image: need at least two components");
  int nv = sn + m;
  Ring Rj(F, nv);
  std::vector<int> up(size_t(sn), 0);
  for (int i = 0; i < sn; ++i) up[i] = i;
  std::vector<Poly> gens;
  for (const Poly& c : constraints)
    gens.push_back(poly_rename_vars(c, up, nv, F, ord));
  for (int j = 0; j < m; ++j)
    gens.push_back(poly_sub(F, ord, poly_var(nv, sn + j),
                            poly_rename_vars(sys[j], up, nv, F, ord)));
  Ideal graph(Rj, gens, /*require_homogeneous=*/false);
  std::vector<int> drop(size_t(sn), 0);
  for (int i = 0; i < sn; ++i) drop[i] = i;
  return eliminate(graph, drop, caps);
}

// Monomials whose residue classes form a basis of (S/I)_d.
std::vector<Mono> quotient_monomial_basis(const Ideal& I, int d, const Caps& caps) {
  MonomialIndex ix(I.nvars(), d);
  EchelonBuilder eb(I.ring().F, int(ix.size()));
  for (const Poly& f : graded_piece(I, d, caps).basis)
    eb.add_row(poly_to_vector(f, ix));
  std::vector<Mono> out;
  for (long long j = 0; j < ix.size(); ++j) {
    std::vector<uint32_t> unit(size_t(ix.size()), 0);
    unit[size_t(j)] = 1;
    if (eb.add_row(std::move(unit))) out.push_back(ix.list()[size_t(j)]);
  }
  return out;
}

// comps raised to a monomial's exponents: prod_i comps[i]^{m_i}.
Poly compose_monomial(const Fp& F, const std::vector<Poly>& comps, const Mono& m) {
  const Order ord = Order::grevlex();
  Poly r = poly_one(F, comps.at(0).nvars());
  for (size_t i = 0; i < m.size(); ++i)
    for (Exp e = 0; e < m[i]; ++e) r = poly_mul(F, ord, r, comps[i]);
  return r;
}

// Complete re-embedding of a parametrized variety by the full linear system
// of degree-k forms on it (a monomial basis of (S/I)_k), via graph
// elimination; the parametrization transports by taking monomial products
// of the source components.
Variety reembed(const Variety& base, int k, const std::string& label,
                const Caps& caps) {
  const Fp& F = base.ideal.ring().F;
  int n = base.ideal.nvars();
  std::vector<Mono> basis = quotient_monomial_basis(base.ideal, k, caps);
  if (basis.size() < 2)
    throw DomainError("reembed: linear system on " + base.label +
                      " has fewer than two sections");
  std::vector<Poly> sys;
  for (const Mono& m : basis) sys.push_back(mono_poly(m));
  Variety out;
  out.ideal = graph_image(F, n, base.ideal.gens(), sys, caps);
  if (base.param) {
    std::vector<Poly> comps;
    for (const Mono& m : basis)
      comps.push_back(compose_monomial(F, base.param->comps, m));
    out.param = Parametrization{base.param->source, std::move(comps),
                                base.param->constraints};
  }
  out.label = label;
  return out;
}

// The identity "parametrization" of a plane curve C = 0: sampling support
// for plane-curve models before re-embedding.
Variety plane_curve_variety(const Fp& F, const Poly& C, const std::string& label) {
  Ring R3(F, 3);
  Variety V;
  V.ideal = Ideal(R3, {C});
  V.param = Parametrization{
      R3, {poly_var(3, 0), poly_var(3, 1), poly_var(3, 2)}, {C}};
  V.label = label;
  return V;
}

Poly det_rec(const Fp& F, const Order& ord, const std::vector<std::vector<Poly>>& M,
             int r, const std::vector<int>& cols) {
  if (cols.size() == 1) return M[size_t(r)][size_t(cols[0])];
  Poly acc(M[0][0].nvars());
  for (size_t k = 0; k < cols.size(); ++k) {
    const Poly& pivot = M[size_t(r)][size_t(cols[k])];
    if (pivot.zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Poly term = poly_mul(F, ord, pivot, det_rec(F, ord, M, r + 1, rest));
    acc = (k % 2 == 0) ? poly_add(F, ord, acc, term) : poly_sub(F, ord, acc, term);
  }
  return acc;
}

}  // namespace

Poly poly_det(const Fp& F, const Order& ord, const std::vector<std::vector<Poly>>& M) {
  int n = int(M.size());
  if (n == 0) throw DomainError("poly_det: empty matrix");
  for (const auto& row : M)
    if (int(row.size()) != n) throw DomainError("poly_det: matrix not square");
  std::vector<int> cols(size_t(n), 0);
  for (int j = 0; j < n; ++j) cols[size_t(j)] = j;
  return det_rec(F, ord, M, 0, cols);
}

Variety family_rnc(const Fp& F, int d) {
  if (d < 1) throw DomainError("family_rnc: need d >= 1");
  int nv = d + 1;
  std::vector<Poly> gens;
  for (int i = 0; i + 1 < d; ++i)
    for (int j = i + 1; j < d; ++j)
      gens.push_back(quad_minor(F, nv, i, j + 1, i + 1, j));
  Variety V;
  V.ideal = Ideal(Ring(F, nv), gens);
  std::vector<Poly> comps;
  for (int k = 0; k <= d; ++k) {
    Mono m{Exp(d - k), Exp(k)};
    comps.push_back(mono_poly(m));
  }
  V.param = Parametrization{Ring(F, 2), std::move(comps), {}};
  V.label = "rnc(" + std::to_string(d) + ")";
  return V;
}

Variety family_scroll(const Fp& F, const std::vector<int>& a) {
  if (a.empty()) throw DomainError("family_scroll: empty block list");
  int n = int(a.size());
  int total = 0, amax = 0;
  for (int ai : a) {
    if (ai < 0) throw DomainError("family_scroll: negative block degree");
    total += ai;
    amax = std::max(amax, ai);
  }
  if (total < 1) throw DomainError("family_scroll: need at least one positive block");
  int nv = total + n;  // sum (a_i + 1)
  // Hankel columns of the concatenated 2-row matrix: (top, bottom) variable
  // index pairs, a_i columns from block i.
  std::vector<std::pair<int, int>> cols;
  int off = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < a[size_t(i)]; ++j) cols.push_back({off + j, off + j + 1});
    off += a[size_t(i)] + 1;
  }
  std::vector<Poly> gens;
  for (size_t c1 = 0; c1 < cols.size(); ++c1)
    for (size_t c2 = c1 + 1; c2 < cols.size(); ++c2)
      gens.push_back(quad_minor(F, nv, cols[c1].first, cols[c2].second,
                                cols[c2].first, cols[c1].second));
  Variety V;
  V.ideal = Ideal(Ring(F, nv), gens);
  // Uniform-degree parametrization: source (s, t, u_1..u_n), block variable
  // (i, j) maps to u_i s^{A-j} t^j with A the largest block degree, so every
  // component has degree A + 1 and all Hankel minors vanish identically.
  int snv = 2 + n;
  std::vector<Poly> comps;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= a[size_t(i)]; ++j) {
      Mono m(size_t(snv), 0);
      m[0] = Exp(amax - j);
      m[1] = Exp(j);
      m[size_t(2 + i)] = 1;
      comps.push_back(mono_poly(m));
    }
  V.param = Parametrization{Ring(F, snv), std::move(comps), {}};
  std::ostringstream lb;
  lb << "scroll(";
  for (int i = 0; i < n; ++i) lb << (i ? "," : "") << a[size_t(i)];
  lb << ")";
  V.label = lb.str();
  return V;
}

Variety family_veronese(const Fp& F, int n, int d, const Caps& caps) {
  if (n < 1 || d < 1) throw DomainError("family_veronese: need n, d >= 1");
  int sn = n + 1;
  MonomialIndex ix(sn, d);
  std::vector<Poly> sys;
  for (const Mono& m : ix.list()) sys.push_back(mono_poly(m));
  Variety V;
  V.ideal = graph_image(F, sn, {}, sys, caps);
  V.param = Parametrization{Ring(F, sn), std::move(sys), {}};
  V.label = "veronese(" + std::to_string(n) + "," + std::to_string(d) + ")";
  return V;
}

Variety family_plane_curve_embed(const Fp& F, const Poly& C,
                                 const std::vector<Poly>& sys,
                                 const std::string& label, const Caps& caps) {
  if (C.zero() || C.nvars() != 3 || !C.homogeneous())
    throw DomainError("family_plane_curve_embed: constraint must be a nonzero "
                      "form in three variables");
  if (sys.size() < 2)
    throw DomainError("family_plane_curve_embed: need at least two sections");
  for (const Poly& f : sys)
    if (f.zero() || f.nvars() != 3 || !f.homogeneous() || f.deg() != sys[0].deg())
      throw DomainError("family_plane_curve_embed: sections must be nonzero "
                        "forms of one common degree in three variables");
  Variety V;
  V.ideal = graph_image(F, 3, {C}, sys, caps);
  V.param = Parametrization{Ring(F, 3), sys, {C}};
  V.label = label;
  return V;
}

Variety family_trigonal_g3(const Fp& F, uint64_t seed, const Caps& caps) {
  if (F.p() < 5)
    throw DomainError("family_trigonal_g3: prime too small for random smooth "
                      "plane quartics");
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly C = random_form(F, 3, 4, rng);
    if (C.zero() || !plane_curve_smooth(F, C, caps)) continue;
    // A smooth plane quartic is a canonically embedded nonhyperelliptic
    // genus-3 curve; projecting from one of its points gives the degree-3
    // pencil, and the conics through that point re-embed the curve in P^4
    // as a degree-7 model whose secant geometry this model family pins.
    Point z;
    try {
      z = sample_point(plane_curve_variety(F, C, "plane-quartic"), rng);
    } catch (const SamplingError&) {
      continue;
    }
    std::vector<Poly> conics = forms_through(F, 3, 2, {z});
    if (conics.size() != 5) continue;
    std::ostringstream lb;
    lb << "trigonal-g3(seed=" << seed << ")";
    return family_plane_curve_embed(F, C, conics, lb.str(), caps);
  }
  throw SamplingError("family_trigonal_g3: no smooth quartic found");
}

Variety family_elliptic(const Fp& F, int k, uint64_t seed, const Caps& caps) {
  if (k < 1) throw DomainError("family_elliptic: need k >= 1");
  if (F.p() < 5)
    throw DomainError("family_elliptic: prime too small for random smooth "
                      "plane cubics");
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly C = random_form(F, 3, 3, rng);
    if (C.zero() || !plane_curve_smooth(F, C, caps)) continue;
    std::ostringstream lb;
    lb << "elliptic(k=" << k << ",seed=" << seed << ")";
    return reembed(plane_curve_variety(F, C, "plane-cubic"), k, lb.str(), caps);
  }
  throw SamplingError("family_elliptic: no smooth cubic found");
}

Variety family_genus2(const Fp& F, uint64_t seed, const Caps& caps) {
  if (F.p() < 5)
    throw DomainError("family_genus2: prime too small for random nodal "
                      "plane quartics");
  Rng rng(seed);
  Ring R3(F, 3);
  MonomialIndex ix(3, 4);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Point z = random_proj_point(F, 3, rng);
    // Quartics singular at z: value and gradient vanish there.
    MatFp M(0, int(ix.size()));
    std::vector<Poly> monos;
    for (const Mono& m : ix.list()) monos.push_back(mono_poly(m));
    std::vector<uint32_t> row(size_t(ix.size()), 0);
    for (size_t j = 0; j < monos.size(); ++j) row[j] = poly_eval(F, monos[j], z);
    M.append_row(row);
    for (int v = 0; v < 3; ++v) {
      for (size_t j = 0; j < monos.size(); ++j)
        row[j] = poly_eval(F, poly_derivative(F, monos[j], v), z);
      M.append_row(row);
    }
    std::vector<std::vector<uint32_t>> ker = mat_kernel(F, M);
    Poly C(3);
    {
      const Order ord = Order::grevlex();
      for (const auto& kv : ker) {
        uint32_t c = rng.fp_elem(F);
        if (c == 0) continue;
        C = poly_add(F, ord, C,
                     poly_scale(F, vector_to_poly(kv, ix, 3, F, ord), c));
      }
    }
    if (C.zero()) continue;
    // Certify that z is an ordinary node and the only singular point: the
    // Jacobian scheme must be a single reduced point (Tjurina number 1; a
    // cusp has length 2, extra singularities add length, a non-reduced
    // curve has positive-dimensional Jacobian scheme).
    std::vector<Poly> parts;
    for (int v = 0; v < 3; ++v) parts.push_back(poly_derivative(F, C, v));
    HilbertData hd = hilbert_data(Ideal(R3, parts), caps);
    if (hd.krull_dim != 1 || hd.degree != 1) continue;
    // A one-nodal quartic is irreducible of geometric genus 2; the conics
    // through the node re-embed its normalization as a smooth sextic in P^4.
    std::vector<Poly> conics = forms_through(F, 3, 2, {z});
    if (conics.size() != 5) continue;
    std::ostringstream lb;
    lb << "genus2(seed=" << seed << ")";
    return family_plane_curve_embed(F, C, conics, lb.str(), caps);
  }
  throw SamplingError("family_genus2: no one-nodal quartic found");
}

Variety family_grassmann_pfaffian(const Fp& F, int n) {
  if (n < 4 || n > 8)
    throw DomainError("family_grassmann_pfaffian: need 4 <= n <= 8");
  const Order ord = Order::grevlex();
  int nv = n * (n - 1) / 2;
  std::vector<std::vector<int>> id(size_t(n), std::vector<int>(size_t(n), -1));
  {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) id[size_t(i)][size_t(j)] = c++;
  }
  auto pv = [&](int i, int j) { return poly_var(nv, id[size_t(i)][size_t(j)]); };
  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          Poly f = poly_sub(F, ord, poly_mul(F, ord, pv(i, j), pv(k, l)),
                            poly_mul(F, ord, pv(i, k), pv(j, l)));
          f = poly_add(F, ord, f, poly_mul(F, ord, pv(i, l), pv(j, k)));
          gens.push_back(f);
        }
  Variety V;
  V.ideal = Ideal(Ring(F, nv), gens);
  // Rows of a generic 2 x n matrix: a_i = var i, b_i = var n + i; the
  // Pluecker coordinate p_{ij} pulls back to the 2-minor a_i b_j - a_j b_i.
  int snv = 2 * n;
  std::vector<Poly> comps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      comps.push_back(quad_minor(F, snv, i, n + j, j, n + i));
  V.param = Parametrization{Ring(F, snv), std::move(comps), {}};
  V.label = "grassmann(" + std::to_string(n) + ")";
  return V;
}

Variety family_catalecticant(const Fp& F, int rows, int cols) {
  if (rows < 1 || rows > 5 || cols < rows)
    throw DomainError("family_catalecticant: need 1 <= rows <= min(cols, 5)");
  const Order ord = Order::grevlex();
  int d = rows + cols - 2;
  int nv = d + 1;
  std::vector<Poly> gens;
  std::vector<int> comb(size_t(rows), 0);
  for (int j = 0; j < rows; ++j) comb[size_t(j)] = j;
  while (true) {
    std::vector<std::vector<Poly>> sub;
    sub.assign(size_t(rows), std::vector<Poly>(size_t(rows), Poly{}));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j)
        sub[size_t(i)][size_t(j)] = poly_var(nv, i + comb[size_t(j)]);
    gens.push_back(poly_det(F, ord, sub));
    int t = rows - 1;
    while (t >= 0 && comb[size_t(t)] == cols - rows + t) --t;
    if (t < 0) break;
    ++comb[size_t(t)];
    for (int j = t + 1; j < rows; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
  }
  Variety V;
  V.ideal = Ideal(Ring(F, nv), gens);
  // The maximal minors cut the locus of Hankel matrices of rank < rows,
  // i.e. sums of rows - 1 rank-one Hankels: parametrize by rows - 1 source
  // triples (s_i, t_i, w_i) with x_k = sum_i w_i s_i^{d-k} t_i^k.
  if (rows >= 2) {
    int summands = rows - 1;
    int snv = 3 * summands;
    std::vector<Poly> comps;
    for (int k = 0; k <= d; ++k) {
      Poly f(snv);
      for (int i = 0; i < summands; ++i) {
        Mono m(size_t(snv), 0);
        m[size_t(3 * i)] = Exp(d - k);
        m[size_t(3 * i + 1)] = Exp(k);
        m[size_t(3 * i + 2)] = 1;
        f = poly_add(F, ord, f, mono_poly(m));
      }
      comps.push_back(f);
    }
    V.param = Parametrization{Ring(F, snv), std::move(comps), {}};
  }
  V.label = "catalecticant(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
  return V;
}

Variety family_project(const Variety& base, CenterRecipe recipe, uint64_t seed,
                       const Caps& caps) {
  const Fp& F = base.ideal.ring().F;
  int n = base.ideal.nvars();
  if (n < 2) throw DomainError("family_project: ambient space too small");
  Rng rng(seed);
  Point z;
  const char* tag = nullptr;
  switch (recipe) {
    case CenterRecipe::OnVariety:
      z = sample_point(base, rng);
      tag = "on-variety";
      break;
    case CenterRecipe::OnSecant: {
      for (int tries = 0; tries < 256 && z.empty(); ++tries) {
        Point w = sample_secant_point(base, 2, rng);
        if (!point_on_ideal(base.ideal, w)) z = w;
      }
      if (z.empty())
        throw SamplingError("family_project: no secant point off " + base.label);
      tag = "on-secant";
      break;
    }
    case CenterRecipe::Outer: {
      // A uniform point off X misses the secant variety as well except with
      // probability on the order of deg/p; seeds are pinned, so no secant
      // membership test is made here.
      for (int tries = 0; tries < 256 && z.empty(); ++tries) {
        Point w = random_proj_point(F, n, rng);
        if (!point_on_ideal(base.ideal, w)) z = w;
      }
      if (z.empty())
        throw SamplingError("family_project: no point off " + base.label);
      tag = "outer";
      break;
    }
  }
  LinearSpace L = LinearSpace::from_points(base.ideal.ring(), {z});
  Variety out;
  out.ideal = linear_projection(base.ideal, L, caps);
  if (base.param) {
    // linear_projection changes coordinates by the frame A (so the center
    // becomes e_0) and drops the first coordinate; transport the
    // parametrization the same way: rows 1.. of A^{-1} applied to comps.
    MatFp Ai = mat_inverse(F, projection_frame(F, L));
    const Order ord = Order::grevlex();
    std::vector<Poly> comps;
    for (int r = 1; r < n; ++r) {
      Poly g(base.param->source.nvars);
      for (int c = 0; c < n; ++c) {
        uint32_t w = Ai.at(r, c);
        if (w) g = poly_add(F, ord, g, poly_scale(F, base.param->comps[size_t(c)], w));
      }
      comps.push_back(g);
    }
    out.param = Parametrization{base.param->source, std::move(comps),
                                base.param->constraints};
  }
  std::ostringstream lb;
  lb << base.label << "/proj-" << tag << "(seed=" << seed << ")";
  out.label = lb.str();
  return out;
}

namespace {

// Rows of the structured 3 x 3 matrix whose 2-minors cut the
// characteristic-2 example: two rows of independent linear forms and one
// row of squares.
std::vector<std::vector<Poly>> char2_matrix(const Fp& F) {
  const Order ord = Order::grevlex();
  int nv = 9;
  std::vector<std::vector<Poly>> M(3, std::vector<Poly>(3));
  for (int j = 0; j < 3; ++j) {
    M[0][size_t(j)] = poly_var(nv, j);
    M[1][size_t(j)] = poly_var(nv, 3 + j);
    M[2][size_t(j)] = poly_mul(F, ord, poly_var(nv, 6 + j), poly_var(nv, 6 + j));
  }
  return M;
}

}  // namespace

Variety family_char2(const Fp& F) {
  if (F.p() != 2) throw DomainError("family_char2: requires p = 2");
  const Order ord = Order::grevlex();
  std::vector<std::vector<Poly>> M = char2_matrix(F);
  std::vector<Poly> gens;
  for (int r = 0; r < 3; ++r)
    for (int s = r + 1; s < 3; ++s)
      for (int c = 0; c < 3; ++c)
        for (int d = c + 1; d < 3; ++d) {
          Poly f = poly_sub(F, ord,
                            poly_mul(F, ord, M[size_t(r)][size_t(c)], M[size_t(s)][size_t(d)]),
                            poly_mul(F, ord, M[size_t(r)][size_t(d)], M[size_t(s)][size_t(c)]));
          gens.push_back(f);
        }
  Variety V;
  V.ideal = Ideal(Ring(F, 9), gens);
  // Image of P^4 under cubics: x0..x5 = y_{0,1} * y_{2,3,4}^2 and
  // x6, x7, x8 = y2^3, y2^2 y3, y2^2 y4, which squares to the third row
  // because squaring is additive in characteristic 2.
  auto cubic = [&](int a0, int a1, int a2) {
    Mono m(5, 0);
    m[size_t(a0)] = Exp(m[size_t(a0)] + 1);
    m[size_t(a1)] = Exp(m[size_t(a1)] + 1);
    m[size_t(a2)] = Exp(m[size_t(a2)] + 1);
    return mono_poly(m);
  };
  std::vector<Poly> comps = {cubic(0, 2, 2), cubic(0, 3, 3), cubic(0, 4, 4),
                             cubic(1, 2, 2), cubic(1, 3, 3), cubic(1, 4, 4),
                             cubic(2, 2, 2), cubic(2, 2, 3), cubic(2, 2, 4)};
  V.param = Parametrization{Ring(F, 5), std::move(comps), {}};
  V.label = "char2";
  return V;
}

Poly char2_secant_determinant(const Fp& F) {
  if (F.p() != 2) throw DomainError("char2_secant_determinant: requires p = 2");
  return poly_det(F, Order::grevlex(), char2_matrix(F));
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;

    for (int d = 4; d <= 9; ++d) {
      CorpusEntry e;
      e.name = "rnc" + std::to_string(d);
      e.q = 2;
      e.dual_route = true;
      e.interp_dmax = 3;
      e.build = [d](const Fp& F, uint64_t) { return family_rnc(F, d); };
      int ec = d - 3;
      e.expect.secant_dim = 3;
      e.expect.secant_codim = ec;
      e.expect.secant_degree = binom(ec + 2, 2);
      e.expect.sectional_genus = binom(ec + 2, 2) - (ec + 2) + 1;
      e.expect.minimal = true;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      e.expect.dim_forms_q1 = binom(d - 1, 3);
      v.push_back(std::move(e));
    }

    for (int d = 6; d <= 9; ++d) {
      CorpusEntry e;
      e.name = "rnc" + std::to_string(d) + "-q3";
      e.q = 3;
      e.interp_dmax = 4;
      e.build = [d](const Fp& F, uint64_t) { return family_rnc(F, d); };
      int ec = d - 5;
      e.expect.secant_dim = 5;
      e.expect.secant_codim = ec;
      e.expect.secant_degree = binom(ec + 3, 3);
      e.expect.sectional_genus = 2 * binom(ec + 3, 3) - binom(ec + 3, 2) + 1;
      e.expect.minimal = true;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      e.expect.dim_forms_q1 = binom(d - 2, 4);
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "scroll23";
      e.q = 2;
      e.dual_route = true;
      e.interp_dmax = 3;
      e.build = [](const Fp& F, uint64_t) { return family_scroll(F, {2, 3}); };
      e.expect.secant_dim = 5;
      e.expect.secant_codim = 1;
      e.expect.secant_degree = 3;
      e.expect.sectional_genus = 1;
      e.expect.minimal = true;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      e.expect.dim_forms_q1 = 1;
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "scroll222";
      e.q = 2;
      e.dual_route = true;
      e.interp_dmax = 3;
      e.build = [](const Fp& F, uint64_t) { return family_scroll(F, {2, 2, 2}); };
      e.expect.secant_dim = 7;
      e.expect.secant_codim = 1;
      e.expect.secant_degree = 3;
      e.expect.sectional_genus = 1;
      e.expect.minimal = true;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      e.expect.dim_forms_q1 = 1;
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "veronese22";
      e.q = 2;
      e.dual_route = true;
      e.interp_dmax = 3;
      e.build = [](const Fp& F, uint64_t) { return family_veronese(F, 2, 2); };
      e.expect.secant_dim = 4;
      e.expect.secant_codim = 1;
      e.expect.secant_degree = 3;
      e.expect.sectional_genus = 1;
      e.expect.minimal = true;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      e.expect.dim_forms_q1 = 1;
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "trigonal-g3";
      e.q = 2;
      e.interp_dmax = 12;
      e.build = [](const Fp& F, uint64_t s) { return family_trigonal_g3(F, s); };
      e.expect.secant_dim = 3;
      e.expect.secant_codim = 1;
      e.expect.secant_degree = 12;
      e.expect.minimal = false;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      e.expect.pei_s = 6;
      e.expect.pei_deg_pi = 6;
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "genus2";
      e.q = 2;
      e.interp_dmax = 8;
      e.build = [](const Fp& F, uint64_t s) { return family_genus2(F, s); };
      e.expect.secant_dim = 3;
      e.expect.secant_codim = 1;
      e.expect.secant_degree = 8;
      e.expect.minimal = false;
      e.expect.almost_minimal = false;
      e.expect.del_pezzo = false;
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "elliptic-sextic";
      e.q = 2;
      e.interp_dmax = 4;
      e.build = [](const Fp& F, uint64_t s) { return family_elliptic(F, 2, s); };
      e.expect.secant_dim = 3;
      e.expect.secant_codim = 2;
      e.expect.secant_degree = 9;
      e.expect.sectional_genus = 10;
      e.expect.minimal = false;
      e.expect.almost_minimal = true;
      e.expect.del_pezzo = true;
      e.expect.dim_forms_q1 = 2;
      e.expect.betti_pins = {{0, 0, 1}, {1, 2, 2}, {2, 4, 1}};
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "grassmann14";
      e.q = 1;
      e.build = [](const Fp& F, uint64_t) { return family_grassmann_pfaffian(F, 5); };
      e.expect.secant_dim = 6;
      e.expect.secant_codim = 3;
      e.expect.secant_degree = 5;
      e.expect.sectional_genus = 1;
      e.expect.minimal = false;
      e.expect.almost_minimal = true;
      e.expect.del_pezzo = true;
      e.expect.dim_forms_q1 = 5;
      e.expect.betti_pins = {{0, 0, 1}, {1, 1, 5}, {2, 1, 5}, {3, 2, 1}};
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "scroll34-proj";
      e.q = 2;
      e.seed = 11;
      e.interp_dmax = 5;
      e.build = [](const Fp& F, uint64_t s) {
        return family_project(family_scroll(F, {3, 4}), CenterRecipe::OnSecant, s);
      };
      e.expect.secant_dim = 5;
      e.expect.secant_codim = 2;
      e.expect.secant_degree = 9;
      e.expect.sectional_genus = 6;
      e.expect.minimal = false;
      e.expect.almost_minimal = true;
      e.expect.del_pezzo = false;
      e.expect.pei_s = 2;
      e.expect.pei_deg_pi = 1;
      e.expect.dim_forms_q1 = 1;
      e.expect.betti_pins = {{0, 0, 1}, {1, 2, 1}, {1, 4, 6}, {2, 4, 9}, {3, 4, 3}};
      v.push_back(std::move(e));
    }

    {
      CorpusEntry e;
      e.name = "char2";
      e.q = 2;
      e.prime = 2;
      e.build = [](const Fp& F, uint64_t) { return family_char2(F); };
      e.expect.secant_codim = 1;
      e.expect.secant_degree = 4;
      v.push_back(std::move(e));
    }

    {
      // Complete quadric re-embedding of the cubic scroll: its 2-secant
      // variety has codimension 6 and attains the extremal degree and
      // genus; desk machines need the stretch flag to attempt it.
      CorpusEntry e;
      e.name = "scroll12-o2";
      e.q = 2;
      e.stretch = true;
      e.interp_dmax = 4;
      e.build = [](const Fp& F, uint64_t) {
        return reembed(family_scroll(F, {1, 2}), 2, "scroll(1,2)-o2", Caps{});
      };
      e.expect.secant_dim = 5;
      e.expect.secant_codim = 6;
      e.expect.secant_degree = 35;
      e.expect.sectional_genus = 36;
      e.expect.minimal = false;
      e.expect.almost_minimal = true;
      e.expect.del_pezzo = true;
      v.push_back(std::move(e));
    }

    return v;
  }();
  return entries;
}

}  // namespace sforge
