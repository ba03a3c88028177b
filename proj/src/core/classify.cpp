#include "core/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "core/errors.hpp"
#include "core/hilbert.hpp"

namespace sforge {

// ---- closed-form bound families --------------------------------------------

namespace {

void require_eq_range(int e, int q, const char* who) {
  if (e < 0 || q < 0) {
    std::ostringstream os;
    os << who << ": need e >= 0 and q >= 0, got e=" << e << ", q=" << q;
    throw DomainError(os.str());
  }
}

}  // namespace

long long formula_B(int e, int p, int q) {
  require_eq_range(e, q, "formula_B");
  if (p < 0) throw DomainError("formula_B: need p >= 0");
  return binom(p + q - 1, q) * binom(e + q, p + q);
}

long long formula_Bprime(int e, int p, int q) {
  require_eq_range(e, q, "formula_Bprime");
  if (p < 0) throw DomainError("formula_Bprime: need p >= 0");
  return formula_B(e, p, q) - binom(e + q - p - 1, q - 1) * binom(e + q - 1, e + q - p);
}

long long formula_Dmin(int e, int q) {
  require_eq_range(e, q, "formula_Dmin");
  return binom(e + q, q);
}

long long formula_Dalmost(int e, int q) {
  require_eq_range(e, q, "formula_Dalmost");
  return binom(e + q, q) + binom(e + q - 1, q - 1);
}

long long formula_genus_min(int e, int q) {
  require_eq_range(e, q, "formula_genus_min");
  return (q - 1) * binom(e + q, q) - binom(e + q, q - 1) + 1;
}

long long formula_genus_dP_max(int e, int q) {
  require_eq_range(e, q, "formula_genus_dP_max");
  return (q - 1) * formula_Dalmost(e, q) + 1;
}

// ---- projection steps --------------------------------------------------------

ProjectionStep project_through(const Variety& X, const LinearSpace& L, const Caps& caps) {
  const Ring& R = X.ideal.ring();
  const Fp F = R.F;
  const int n = R.nvars;
  if (L.ring() != R) throw DomainError("project_through: center lives in a different ring");
  const int k = L.dim() + 1;
  if (k >= n) throw DomainError("project_through: the center leaves no image coordinates");

  ProjectionStep st;
  st.frame = projection_frame(F, L);
  st.frame_inv = mat_inverse(F, st.frame);
  st.dropped = k;
  std::vector<int> drop(size_t(k), 0);
  std::iota(drop.begin(), drop.end(), 0);
  st.image.ideal = eliminate(ideal_linear_change(X.ideal, st.frame, caps), drop, caps);
  if (X.param) {
    // The projection reads off the last n-k frame coordinates; transport the
    // parametrization through the same frame so sampling stays available.
    const Order ord = Order::grevlex();
    std::vector<Poly> comps;
    comps.reserve(size_t(n - k));
    for (int r = k; r < n; ++r) {
      Poly g(X.param->source.nvars);
      for (int c = 0; c < n; ++c) {
        const uint32_t w = st.frame_inv.at(r, c);
        if (w) g = poly_add(F, ord, g, poly_scale(F, X.param->comps[size_t(c)], w));
      }
      comps.push_back(std::move(g));
    }
    st.image.param = Parametrization{X.param->source, std::move(comps), X.param->constraints};
  }
  st.image.label = X.label + "/proj(" + std::to_string(k) + ")";
  return st;
}

ProjectionStep inner_projection(const Variety& X, Rng& rng, const Caps& caps) {
  const Point z = sample_point(X, rng);
  ProjectionStep st = project_through(X, LinearSpace::from_points(X.ideal.ring(), {z}), caps);
  st.center = z;
  return st;
}

ProjectionStep tangential_projection(const Variety& X, Rng& rng, const Caps& caps) {
  const Point z = sample_point(X, rng);
  ProjectionStep st = project_through(X, tangent_space(X, z), caps);
  st.center = z;
  return st;
}

Ideal lift_subring_ideal(const Ideal& J, const MatFp& frame_inv, int dropped,
                         const Caps& caps) {
  const int n = J.nvars() + dropped;
  if (frame_inv.rows() != n || frame_inv.cols() != n)
    throw DomainError("lift_subring_ideal: frame size does not match the target ring");
  std::vector<int> var_map(size_t(J.nvars()), 0);
  for (int i = 0; i < J.nvars(); ++i) var_map[size_t(i)] = i + dropped;
  return ideal_linear_change(ideal_rename_vars(J, var_map, n), frame_inv, caps);
}

// ---- classification -----------------------------------------------------------

namespace {

struct PureMatch {
  bool match = false;      // window cells equal the reference table
  bool certified = false;  // window provably contains every nonzero entry
};

// Compare the whole window against the pure table shape: a 1 at (0,0), the
// closed-form row-q values, for the Gorenstein variant a trailing 1 at
// (e, 2q), and zero elsewhere.
PureMatch match_pure(const BettiWindow& B, int e, int q, bool gorenstein) {
  PureMatch pm;
  pm.match = true;
  for (int i = 0; i <= B.imax && pm.match; ++i) {
    for (int j = 0; j <= B.jmax && pm.match; ++j) {
      long long want = 0;
      if (i == 0 && j == 0) want = 1;
      else if (!gorenstein && j == q && i >= 1 && i <= e) want = formula_B(e, i, q);
      else if (gorenstein && j == q && i >= 1 && i <= e - 1) want = formula_Bprime(e, i, q);
      else if (gorenstein && j == 2 * q && i == e) want = 1;
      if (B.at(i, j) != want) pm.match = false;
    }
  }
  pm.certified = B.artinian && B.jmax >= B.top_nonzero_slice && B.imax >= B.reduced_vars;
  return pm;
}

}  // namespace

ClassificationReport classify_secant_ideal(const Ideal& secant_ideal, int q, const Caps& caps) {
  if (q < 1) throw DomainError("classify: q must be >= 1");
  ClassificationReport rep;
  rep.q = q;

  const HilbertData hd = hilbert_data(secant_ideal, caps);
  if (hd.proj_dim < 1)
    throw DomainError("classify: the secant ideal does not define a positive-dimensional scheme");
  if (hd.codim < 1)
    throw DomainError("classify: the secant variety fills its ambient space (codimension 0)");
  rep.e = hd.codim;
  rep.dim = hd.proj_dim;
  rep.degree = hd.degree;
  rep.sectional_genus = hd.sectional_genus;
  rep.genus_defined = hd.genus_defined;
  rep.dim_forms_q1 = graded_dim(secant_ideal, q + 1, caps);

  rep.is_minimal_degree = rep.degree == formula_Dmin(rep.e, q);
  rep.is_almost_minimal_degree = rep.degree == formula_Dalmost(rep.e, q);
  rep.is_del_pezzo = rep.is_almost_minimal_degree && rep.genus_defined &&
                     rep.sectional_genus == formula_genus_dP_max(rep.e, q);

  try {
    rep.betti = koszul_betti(secant_ideal, rep.e + 1, 2 * q + 1, caps);
    rep.betti_available = true;
  } catch (const CapExceeded& ex) {
    rep.betti_note = ex.what();
  }
  if (rep.betti_available) {
    rep.regularity_bound = regularity(rep.betti);
    rep.strand = strand_length(rep.betti, q);
    for (int p = 1; p <= rep.betti.imax; ++p) {
      if (!property_N(rep.betti, q + 1, p).holds) break;
      rep.max_p_property_N = p;
    }
    const PureMatch cm = match_pure(rep.betti, rep.e, q, /*gorenstein=*/false);
    const PureMatch go = match_pure(rep.betti, rep.e, q, /*gorenstein=*/true);
    // A match only counts once the window provably holds the whole table.
    rep.q_pure_CM = cm.match && cm.certified;
    rep.q_pure_Gorenstein = go.match && go.certified;
    if ((cm.match && !cm.certified) || (go.match && !go.certified))
      rep.betti_note = "window matches a pure table but cannot certify the unseen entries";
  }
  return rep;
}

ClassificationReport classify_secant(const Variety& X, int q, uint64_t seed, int interp_dmax,
                                     const Caps& caps) {
  Ideal Isec;
  if (interp_dmax > 0) {
    Rng rng(seed);
    Isec = secant_ideal_interp(X, q, interp_dmax, rng, caps);
  } else {
    Isec = secant_ideal_elim(X, q, caps);
  }
  return classify_secant_ideal(Isec, q, caps);
}

std::vector<EquivalenceCheck> verify_equivalences(ClassificationReport& rep) {
  std::vector<EquivalenceCheck> out;
  const int q = rep.q, e = rep.e;
  const bool bav = rep.betti_available;
  const bool tail_ok = bav && rep.betti.imax >= rep.betti.reduced_vars;
  const std::string tail_note =
      tail_ok ? "" : "columns beyond the window are not certified to vanish";

  auto push = [&out](std::string cond, bool value, bool computed, std::string note = "") {
    out.push_back(EquivalenceCheck{std::move(cond), value, computed, std::move(note)});
  };
  auto family_agreement = [&out, &push](const std::string& prefix) {
    bool all_computed = true, any = false, first = false, agree = true;
    for (const EquivalenceCheck& c : out) {
      if (c.condition.rfind(prefix, 0) != 0) continue;
      if (!c.computed) { all_computed = false; continue; }
      if (!any) { first = c.value; any = true; }
      else if (c.value != first) agree = false;
    }
    push(prefix + ":agreement", agree, all_computed && any,
         agree ? "" : "computed conditions disagree");
  };

  // Minimal-degree characterization, conditions (1)..(5b).
  push("minimal(1)", rep.degree == formula_Dmin(e, q), true);
  push("minimal(2)", rep.q_pure_CM, bav, rep.betti_note);
  {
    bool v = true;
    for (int p = 1; bav && p <= rep.betti.imax; ++p)
      v = v && rep.betti.at(p, q) == formula_B(e, p, q);
    push("minimal(3a)", bav && v, bav, tail_note);
  }
  push("minimal(3b)", rep.dim_forms_q1 == binom(e + q, q + 1), true);
  {
    bool v = false;
    for (int p = 1; bav && p <= std::min(e, rep.betti.imax); ++p)
      v = v || rep.betti.at(p, q) == formula_B(e, p, q);
    push("minimal(3c)", v, bav);
  }
  push("minimal(4)", bav && rep.strand.value == e, bav,
       bav && !rep.strand.certified ? "strand length not certified" : "");
  push("minimal(5a)", bav && rep.regularity_bound.value == q + 1, bav,
       bav && !rep.regularity_bound.certified ? "regularity not certified" : "");
  push("minimal(5b)", bav && property_N(rep.betti, q + 1, e).holds, bav);
  family_agreement("minimal");

  // Del Pezzo characterization, conditions (1)..(4); stated for e >= 2.
  if (e >= 2) {
    push("delPezzo(1)",
         rep.degree == formula_Dalmost(e, q) && rep.genus_defined &&
             rep.sectional_genus == formula_genus_dP_max(e, q),
         true);
    push("delPezzo(2)", rep.q_pure_Gorenstein, bav, rep.betti_note);
    {
      bool v = true;
      for (int p = 1; bav && p <= std::min(e, rep.betti.imax); ++p)
        v = v && rep.betti.at(p, q) == formula_Bprime(e, p, q);
      push("delPezzo(3a)", bav && v, bav, tail_note);
    }
    push("delPezzo(3b)",
         rep.dim_forms_q1 == binom(e + q, q + 1) - binom(e + q - 2, q - 1), true);
    {
      bool v = false;
      for (int p = 1; bav && p <= std::min(e - 1, rep.betti.imax); ++p)
        v = v || rep.betti.at(p, q) == formula_Bprime(e, p, q);
      push("delPezzo(3c)", v, bav);
    }
    {
      const bool n_small = bav && property_N(rep.betti, q + 1, e - 1).holds;
      const bool n_big = bav && property_N(rep.betti, q + 1, e).holds;
      push("delPezzo(4)", n_small && !n_big, bav);
    }
    family_agreement("delPezzo");
  }

  rep.checks = out;
  return out;
}

ICReport verify_IC(const Variety& X, int q, const Ideal& secant_ideal, uint64_t seed,
                   int interp_dmax, const Caps& caps) {
  if (q < 1) throw DomainError("verify_IC: q must be >= 1");
  if (X.ideal.ring() != secant_ideal.ring())
    throw DomainError("verify_IC: the secant ideal lives in a different ring");
  Rng rng(seed);
  std::vector<Poly> gens;
  for (int i = 0; i < q + 2; ++i) {
    const ProjectionStep st = inner_projection(X, rng, caps);
    Ideal Jq;
    if (interp_dmax > 0) {
      Jq = secant_ideal_interp(st.image, q, interp_dmax, rng, caps);
    } else {
      Jq = secant_ideal_elim(st.image, q, caps);
    }
    const Ideal lifted = lift_subring_ideal(Jq, st.frame_inv, st.dropped, caps);
    for (const Poly& g : lifted.gens()) gens.push_back(g);
  }
  ICReport rep;
  rep.points = q + 2;
  const Ideal sum(X.ideal.ring(), std::move(gens));
  rep.contained = ideal_contains(secant_ideal, sum, caps);
  rep.holds = rep.contained && ideal_contains(sum, secant_ideal, caps);
  if (!rep.contained)
    rep.note = "a lifted projected-secant equation is not in the secant ideal";
  else if (!rep.holds)
    rep.note = "the lifted ideals span a proper subideal";
  return rep;
}

std::vector<Poly> prolongation(const Ring& R, const std::vector<Poly>& W, const Caps& caps) {
  if (W.empty()) throw DomainError("prolongation: empty form space");
  const Fp F = R.F;
  const int n = R.nvars;
  const int d = W.front().deg();
  for (const Poly& w : W) {
    if (w.zero() || !w.homogeneous() || w.deg() != d || w.nvars() != n)
      throw DomainError("prolongation: W must be nonzero forms of one degree");
  }
  const MonomialIndex id(n, d), id1(n, d + 1);
  EchelonBuilder span(F, int(id.size()));
  for (const Poly& w : W) span.add_row(poly_to_vector(w, id));

  const long long rows = (long long)n * id.size(), cols = id1.size();
  if (rows * cols > caps.max_matrix) {
    std::ostringstream os;
    os << "prolongation: constraint matrix is " << rows << " x " << cols
       << " entries, above the matrix cap " << caps.max_matrix;
    throw CapExceeded(os.str());
  }
  MatFp M{int(rows), int(cols)};
  for (long long c = 0; c < cols; ++c) {
    const Mono& m = id1.list()[size_t(c)];
    for (int v = 0; v < n; ++v) {
      if (m[size_t(v)] == 0) continue;
      Mono dm = m;
      --dm[size_t(v)];
      std::vector<uint32_t> vec(size_t(id.size()), 0);
      vec[size_t(id.index_of(dm.data()))] = F.from_int(m[size_t(v)]);
      vec = span.reduce(std::move(vec));
      for (long long k = 0; k < id.size(); ++k)
        M.at(int(v * id.size() + k), int(c)) = vec[size_t(k)];
    }
  }
  std::vector<Poly> out;
  for (const auto& kv : mat_kernel(F, M))
    out.push_back(vector_to_poly(kv, id1, n, F, Order::grevlex()));
  return out;
}

GBcwfReport verify_gBcwf_corollary(const Variety& X, int q, uint64_t seed, int interp_dmax,
                                   const Caps& caps) {
  if (q < 1) throw DomainError("verify_gBcwf_corollary: q must be >= 1");
  Rng rng(seed);
  Rng r_interp = rng.fork();
  Rng r_proj = rng.fork();

  GBcwfReport rep;
  Ideal Isec;
  if (interp_dmax > 0) {
    Isec = secant_ideal_interp(X, q, interp_dmax, r_interp, caps);
  } else {
    Isec = secant_ideal_elim(X, q, caps);
  }
  const HilbertData hs = hilbert_data(Isec, caps);
  rep.secant_minimal = hs.codim >= 1 && hs.degree == formula_Dmin(hs.codim, q);

  Variety cur = X;
  for (int t = 0; t < q - 1; ++t) cur = tangential_projection(cur, r_proj, caps).image;
  const HilbertData hp = hilbert_data(cur.ideal, caps);
  rep.projection_degree = hp.degree;
  rep.projection_codim = hp.codim;
  rep.projection_minimal = hp.degree == hp.codim + 1;
  rep.agree = rep.secant_minimal == rep.projection_minimal;
  return rep;
}

}  // namespace sforge
