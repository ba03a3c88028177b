#include "core/pei.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"
#include "core/hilbert.hpp"

namespace sforge {

namespace {

// Largest x0-exponent over the terms of f (0 for the zero polynomial).
int x0_degree(const Poly& f) {
  int e = 0;
  for (int i = 0; i < f.nterms(); ++i) e = std::max(e, int(f.mono(i)[0]));
  return e;
}

// Coefficient of x0^e in f, as a polynomial in the subring on the
// remaining variables (variable i of f becomes variable i-1).
Poly coeff_of_x0_power(const Fp& F, const Poly& f, int e) {
  Poly out(f.nvars() - 1);
  for (int i = 0; i < f.nterms(); ++i)
    if (int(f.mono(i)[0]) == e) out.push_term(f.coeff(i), f.mono(i) + 1);
  out.normalize(F, Order::grevlex());
  return out;
}

// y = A x over F_p.
std::vector<uint32_t> mat_apply(const Fp& F, const MatFp& A, const std::vector<uint32_t>& x) {
  std::vector<uint32_t> y(size_t(A.rows()), 0);
  for (int i = 0; i < A.rows(); ++i) {
    uint64_t acc = 0;
    for (int j = 0; j < A.cols(); ++j) acc = F.add(uint32_t(acc), F.mul(A.at(i, j), x[size_t(j)]));
    y[size_t(i)] = uint32_t(acc);
  }
  return y;
}

}  // namespace

PEIChain pei_chain_framed(const Ideal& I, const MatFp& frame, const Caps& caps) {
  const int n = I.nvars();
  if (n < 2) throw DomainError("pei_chain: ambient ring needs at least two variables");
  if (frame.rows() != n || frame.cols() != n)
    throw DomainError("pei_chain: frame must be a square matrix of the ambient size");
  const Fp& F = I.ring().F;

  PEIChain ch;
  ch.base = I;
  ch.frame = frame;
  ch.frame_inv = mat_inverse(F, frame);  // throws DomainError if singular
  ch.z.assign(size_t(n), 0);
  for (int i = 0; i < n; ++i) ch.z[size_t(i)] = frame.at(i, 0);
  ch.framed = ideal_linear_change(I, frame, caps);
  ch.subring = Ring(F, n - 1);

  auto gb = ch.framed.groebner(Order::var_first(), caps);
  int top = 0;
  for (const Poly& g : gb->g) top = std::max(top, x0_degree(g));
  ch.gb_x0_degree = top;

  // Leading x0-coefficients, grouped by x0-degree; chain entry i collects
  // the groups 0..i, so the ascent K_i <= K_{i+1} holds by construction.
  std::vector<std::vector<Poly>> level(size_t(top) + 1);
  for (const Poly& g : gb->g) {
    int e = x0_degree(g);
    level[size_t(e)].push_back(coeff_of_x0_power(F, g, e));
  }
  std::vector<Poly> acc;
  for (int i = 0; i <= top; ++i) {
    for (const Poly& f : level[size_t(i)]) acc.push_back(f);
    ch.chain.emplace_back(ch.subring, acc);
  }

  // The stabilization index is defined by strict growth; drop any trailing
  // levels whose ideal did not grow so that K_{s-1} != K_s is guaranteed.
  ch.s = top;
  while (ch.s > 0 && ideal_equal(ch.chain[size_t(ch.s) - 1], ch.chain[size_t(ch.s)], caps)) {
    ch.chain.pop_back();
    --ch.s;
  }
  ch.k_inf = ch.chain.back();
  return ch;
}

PEIChain pei_chain(const Ideal& I, const Point& z, const Caps& caps) {
  if (int(z.size()) != I.nvars())
    throw DomainError("pei_chain: point length does not match the ambient ring");
  LinearSpace L = LinearSpace::from_points(I.ring(), {z});
  if (L.dim() != 0) throw DomainError("pei_chain: center must be a single point");
  return pei_chain_framed(I, projection_frame(I.ring().F, L), caps);
}

Point pei_project_point(const PEIChain& ch, const Point& x) {
  const Fp& F = ch.base.ring().F;
  if (int(x.size()) != ch.base.nvars())
    throw DomainError("pei_project_point: point length does not match the ambient ring");
  std::vector<uint32_t> w = mat_apply(F, ch.frame_inv, x);
  Point img(w.begin() + 1, w.end());
  bool zero = true;
  for (uint32_t c : img) zero = zero && c == 0;
  if (zero) throw DomainError("pei_project_point: the point is the projection center");
  return img;
}

std::vector<long long> pei_definition_profile(const Ideal& framed, int D, const Caps& caps) {
  const int n = framed.nvars();
  const Fp& F = framed.ring().F;
  MonomialIndex ix(n, D);
  const long long C = ix.size();

  GradedPiece gp = graded_piece(framed, D, caps);
  if ((long long)gp.basis.size() * C > caps.max_matrix) {
    std::ostringstream os;
    os << "pei_definition_profile: echelon of " << gp.basis.size() << " x " << C
       << " exceeds max_matrix=" << caps.max_matrix;
    throw CapExceeded(os.str());
  }

  // Permute monomial columns into blocks of descending x0-exponent.  In a
  // row echelon form over that ordering, the rows with pivot in a block of
  // x0-exponent <= i span exactly the subspace { f : deg_{x0} f <= i }, so
  // counting pivots per block yields every definitional slice dimension of
  // the partial elimination ideals in total degree D at once.
  std::vector<long long> pos_of(size_t(C), 0);
  std::vector<int> col_x0(size_t(C), 0);
  {
    std::vector<std::vector<long long>> bucket(size_t(D) + 1);
    for (long long i = 0; i < C; ++i) bucket[ix.list()[size_t(i)][0]].push_back(i);
    long long next = 0;
    for (int e = D; e >= 0; --e)
      for (long long orig : bucket[size_t(e)]) {
        pos_of[size_t(orig)] = next;
        col_x0[size_t(next)] = e;
        ++next;
      }
  }

  EchelonBuilder eb(F, int(C));
  for (const Poly& f : gp.basis) {
    std::vector<uint32_t> v = poly_to_vector(f, ix);
    std::vector<uint32_t> w(size_t(C), 0);
    for (long long j = 0; j < C; ++j) w[size_t(pos_of[size_t(j)])] = v[size_t(j)];
    eb.add_row(std::move(w));
  }

  std::vector<long long> cnt(size_t(D) + 1, 0);
  for (int p : eb.pivots()) ++cnt[size_t(col_x0[size_t(p)])];
  return cnt;
}

long long pei_tilde_dim(const Ideal& framed, int i, int D, const Caps& caps) {
  std::vector<long long> cnt = pei_definition_profile(framed, D, caps);
  long long total = 0;
  for (int e = 0; e <= std::min(i, D); ++e) total += cnt[size_t(e)];
  return total;
}

bool pei_chain_matches_definition(const PEIChain& ch, int dmax, const Caps& caps,
                                  std::string* diag) {
  std::ostringstream skipped;
  for (int D = 0; D <= dmax; ++D) {
    std::vector<long long> cnt;
    try {
      cnt = pei_definition_profile(ch.framed, D, caps);
    } catch (const CapExceeded& e) {
      skipped << "degree " << D << " skipped: " << e.what() << "\n";
      continue;
    }
    for (int i = 0; i <= D; ++i) {
      const Ideal& Ki = ch.chain[size_t(std::min(i, ch.s))];
      long long want = graded_dim(Ki, D - i, caps);
      if (cnt[size_t(i)] != want) {
        if (diag) {
          std::ostringstream os;
          os << "slice mismatch at level " << i << ", degree " << (D - i)
             << ": definition gives " << cnt[size_t(i)] << ", Groebner chain gives " << want;
          *diag = os.str();
        }
        return false;
      }
    }
  }
  if (diag) *diag = skipped.str();
  return true;
}

int projection_degree(const PEIChain& ch, const Caps& caps) {
  HilbertData hdX = hilbert_data(ch.framed, caps);
  HilbertData hd0 = hilbert_data(ch.chain[0], caps);
  if (hd0.proj_dim != hdX.proj_dim) {
    std::ostringstream os;
    os << "projection_degree: not generically finite (image dimension " << hd0.proj_dim
       << " below source dimension " << hdX.proj_dim << ")";
    throw DomainError(os.str());
  }
  for (int i = 1; i <= ch.s; ++i)
    if (hilbert_data(ch.chain[size_t(i)], caps).proj_dim < hd0.proj_dim) return i;
  throw DomainError(
      "projection_degree: no level drops dimension below the image; "
      "the projection is not generically finite");
}

int projection_degree(const Ideal& I, const Point& z, const Caps& caps) {
  return projection_degree(pei_chain(I, z, caps), caps);
}

TangentConeReport simple_tangent_cone_check(const Variety& X, int q, const Point& z,
                                            const Ideal& secant_ideal, const Caps& caps) {
  if (q < 2) throw DomainError("simple_tangent_cone_check: requires q >= 2");
  if (secant_ideal.nvars() != X.ideal.nvars())
    throw DomainError("simple_tangent_cone_check: secant ideal lives in a different ring");
  if (!point_on_ideal(X.ideal, z))
    throw DomainError("simple_tangent_cone_check: the center must lie on X");
  const Fp& F = X.ideal.ring().F;
  const int n = X.ideal.nvars();

  TangentConeReport rep;
  LinearSpace T = tangent_space(X, z);
  const int t = T.dim();
  int dimX = hilbert_data(X.ideal, caps).proj_dim;
  if (t != dimX) {
    std::ostringstream os;
    os << "center is singular on X: tangent space has dimension " << t << ", X has dimension "
       << dimX;
    rep.detail = os.str();
    return rep;  // Inconclusive
  }

  // Frame adapted to the tangent space: column 0 is z, columns 0..t span
  // T_zX, the rest are standard basis vectors.  In these coordinates the
  // tangential projection is literally "eliminate variables 0..t", and the
  // cone the tangent cone should equal lives in the chain's subring with
  // variables 1..t as vertex directions.
  MatFp A(n, n);
  {
    EchelonBuilder eb(F, n);
    std::vector<Point> cols;
    eb.add_row(z);
    cols.push_back(z);
    for (const Point& p : T.points())
      if (eb.add_row(p)) cols.push_back(p);
    for (int i = 0; i < n && int(cols.size()) < n; ++i) {
      Point e(size_t(n), 0);
      e[size_t(i)] = 1;
      if (eb.add_row(e)) cols.push_back(e);
    }
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) A.at(i, j) = cols[size_t(j)][size_t(i)];
  }

  PEIChain ch = pei_chain_framed(secant_ideal, A, caps);
  rep.s = ch.s;
  if (ch.s != 1) {
    std::ostringstream os;
    os << "stabilization number s = " << ch.s << " (simple tangent cone needs s = 1)";
    rep.detail = os.str();
    rep.verdict = TangentConeReport::Verdict::False;
    return rep;
  }

  std::vector<int> drop(size_t(t) + 1);
  for (int i = 0; i <= t; ++i) drop[size_t(i)] = i;
  Ideal tangential = eliminate(ideal_linear_change(X.ideal, A, caps), drop, caps);
  Ideal target = tangential;
  if (q > 2) {
    Variety XT;
    XT.ideal = tangential;
    XT.label = X.label + "/tangential";
    target = secant_ideal_elim(XT, q - 1, caps);
  }
  std::vector<int> up(size_t(target.nvars()));
  for (int j = 0; j < target.nvars(); ++j) up[size_t(j)] = j + t;
  Ideal cone = ideal_rename_vars(target, up, n - 1);

  rep.equal = ideal_equal(ch.k_inf, cone, caps);
  rep.contained = rep.equal || ideal_contains(cone, ch.k_inf, caps);
  if (rep.equal) {
    rep.verdict = TangentConeReport::Verdict::True;
    rep.detail = "s = 1 and K_inf equals the cone over the tangential (q-1)-secant";
  } else {
    rep.verdict = TangentConeReport::Verdict::Inconclusive;
    rep.detail = rep.contained
                     ? "s = 1 but K_inf sits strictly inside the tangential cone ideal; "
                       "primality cannot be certified"
                     : "s = 1 but K_inf is not contained in the tangential cone ideal";
  }
  return rep;
}

DecompositionReport hilbert_decomposition_check(const PEIChain& ch, const Caps& caps) {
  DecompositionReport rep;
  std::ostringstream detail;

  HilbertData hdX = hilbert_data(ch.framed, caps);
  if (hdX.proj_dim < 1)
    throw DomainError("hilbert_decomposition_check: the scheme must have positive dimension");
  std::vector<HilbertData> hd;
  hd.reserve(size_t(ch.s) + 1);
  for (const Ideal& K : ch.chain) hd.push_back(hilbert_data(K, caps));
  if (hd[0].proj_dim != hdX.proj_dim) {
    std::ostringstream os;
    os << "hilbert_decomposition_check: not generically finite (image dimension "
       << hd[0].proj_dim << " below source dimension " << hdX.proj_dim << ")";
    throw DomainError(os.str());
  }

  rep.s = ch.s;
  rep.s_prime = 0;
  for (int i = 1; i <= ch.s && rep.s_prime == 0; ++i)
    if (hd[size_t(i)].proj_dim < hd[0].proj_dim) rep.s_prime = i;
  if (rep.s_prime == 0)
    throw DomainError(
        "hilbert_decomposition_check: no level drops dimension below the image; "
        "the projection is not generically finite");

  const int n = ch.framed.nvars();
  std::vector<int> up(size_t(n) - 1);
  for (int j = 0; j + 1 < n; ++j) up[size_t(j)] = j + 1;
  Ideal cone = ideal_rename_vars(ch.k_inf, up, n);
  HilbertData hdC = hilbert_data(cone, caps);

  rep.center_on_scheme = point_on_ideal(ch.base, ch.z);
  rep.cone_present = hdC.krull_dim >= 0;  // false exactly when K_inf is the unit ideal
  rep.deg_X = hdX.degree;
  rep.deg_Xz = hd[0].degree;
  rep.deg_cone = rep.cone_present ? hdC.degree : 0;
  rep.genus_X = hdX.sectional_genus;
  rep.genus_Xz = hd[0].sectional_genus;
  rep.genus_cone = rep.cone_present ? hdC.sectional_genus : 0;
  for (int i = rep.s_prime; i < ch.s; ++i) {
    rep.z_dims.push_back(hd[size_t(i)].proj_dim);
    rep.z_degs.push_back(hd[size_t(i)].degree);
  }

  // Polynomial identity, evaluated exactly at dim X + 3 sample arguments
  // (both sides are polynomials of degree dim X).
  rep.polynomial_identity = true;
  for (long long m = 0; m <= hdX.proj_dim + 2; ++m) {
    long long lhs = hdX.polynomial_value(m);
    long long rhs = 0;
    for (int i = 0; i < rep.s_prime; ++i) rhs += hd[0].polynomial_value(m - i);
    for (int i = rep.s_prime; i < ch.s; ++i) rhs += hd[size_t(i)].polynomial_value(m - i);
    rhs += hdC.polynomial_value(m - ch.s);
    if (lhs != rhs) {
      rep.polynomial_identity = false;
      detail << "polynomial identity fails at m=" << m << ": source " << lhs << ", decomposition "
             << rhs << "\n";
      break;
    }
  }

  long long deg_lhs = rep.deg_X;
  long long deg_rhs = (long long)rep.s_prime * rep.deg_Xz + rep.deg_cone;
  rep.degree_identity = deg_lhs == deg_rhs;
  if (!rep.degree_identity)
    detail << "degree identity fails: deg X = " << deg_lhs << " but s'*deg X_z + deg C = "
           << deg_rhs << "\n";

  // Sectional-genus identity; only divisorial middle levels contribute.
  long long mid = 0;
  for (size_t k = 0; k < rep.z_dims.size(); ++k)
    if (rep.z_dims[k] == hd[0].proj_dim - 1) mid += rep.z_degs[k];
  long long genus_rhs = (long long)rep.s_prime * rep.genus_Xz - rep.s_prime +
                        binom(rep.s_prime, 2) * rep.deg_Xz - mid;
  if (rep.cone_present) {
    if (!hdC.genus_defined) {
      rep.genus_identity = false;
      detail << "genus identity not evaluable: cone genus undefined\n";
    } else {
      genus_rhs += rep.genus_cone + (long long)ch.s * rep.deg_cone;
      rep.genus_identity = rep.genus_X == genus_rhs;
    }
  } else {
    genus_rhs += 1;
    rep.genus_identity = rep.genus_X == genus_rhs;
  }
  if (!rep.genus_identity && detail.str().find("genus identity") == std::string::npos)
    detail << "genus identity fails: pi(X) = " << rep.genus_X << " but the decomposition gives "
           << genus_rhs << "\n";

  rep.ok = rep.polynomial_identity && rep.degree_identity && rep.genus_identity;
  rep.detail = detail.str();
  return rep;
}

DecompositionReport hilbert_decomposition_check(const Ideal& I, const Point& z, const Caps& caps) {
  return hilbert_decomposition_check(pei_chain(I, z, caps), caps);
}

}  // namespace sforge
