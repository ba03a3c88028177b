#include "core/groebner.hpp"

#include <algorithm>
#include <cstring>

#include "core/errors.hpp"

namespace sforge {

namespace {

uint64_t var_mask(const Exp* m, int n) {
  if (n > 64) return ~uint64_t(0);
  uint64_t b = 0;
  for (int i = 0; i < n; ++i)
    if (m[i]) b |= uint64_t(1) << i;
  return b;
}

struct BasisElem {
  Poly p;
  Mono lead;
  uint64_t mask = 0;
  int deg = 0;        // degree of the leading monomial
  bool redundant = false;  // lead divisible by a newer lead; kept as reducer
};

struct Pair {
  int i, j;
  Mono lcm;
  int deg;
  uint64_t mask;
};

}  // namespace

Poly normal_form(const Ring& ring, const Poly& f, const std::vector<Poly>& basis,
                 const Order& ord) {
  const Fp& F = ring.F;
  int nv = ring.nvars;
  struct Red {
    const Poly* p;
    const Exp* lm;
    uint64_t mask;
    int deg;
  };
  std::vector<Red> reds;
  reds.reserve(basis.size());
  for (const Poly& g : basis) {
    if (!g.zero()) reds.push_back({&g, g.lm(), var_mask(g.lm(), nv), mono_deg(g.lm(), nv)});
  }
  Poly work = f;
  Poly out(nv);
  Mono q(nv);
  while (!work.zero()) {
    const Exp* lm = work.lm();
    uint64_t wm = var_mask(lm, nv);
    int wd = mono_deg(lm, nv);
    const Red* hit = nullptr;
    for (const Red& r : reds) {
      if (r.deg <= wd && (r.mask & ~wm) == 0 && mono_divides(r.lm, lm, nv)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      out.push_term(work.lc(), lm);
      // Drop the leading term.
      std::vector<uint32_t> cf(work.coeffs().begin() + 1, work.coeffs().end());
      std::vector<Exp> ex(work.exps().begin() + nv, work.exps().end());
      work = poly_from_raw(nv, std::move(cf), std::move(ex));
      continue;
    }
    uint32_t c = F.div(work.lc(), hit->p->lc());
    mono_div(hit->lm, lm, q.data(), nv);
    work = poly_sub(F, ord, work, poly_mul_term(F, *hit->p, c, q.data()));
  }
  // Terms were appended in strictly descending order; no normalize needed.
  return out;
}

namespace {

Poly spoly(const Fp& F, const Order& ord, const Poly& f, const Poly& g, const Mono& lcm) {
  int nv = f.nvars();
  Mono qf(nv), qg(nv);
  mono_div(f.lm(), lcm.data(), qf.data(), nv);
  mono_div(g.lm(), lcm.data(), qg.data(), nv);
  Poly a = poly_mul_term(F, f, F.inv(f.lc()), qf.data());
  Poly b = poly_mul_term(F, g, F.inv(g.lc()), qg.data());
  return poly_sub(F, ord, a, b);
}

}  // namespace

std::vector<Poly> buchberger(const Ring& ring, const std::vector<Poly>& gens, const Order& ord,
                             const Caps& caps) {
  const Fp& F = ring.F;
  const int nv = ring.nvars;

  std::vector<BasisElem> G;
  std::vector<Pair> P;

  auto add_pairs_and_element = [&](Poly h) {
    int t = int(G.size());
    Mono lead(h.lm(), h.lm() + nv);
    uint64_t hmask = var_mask(lead.data(), nv);
    int hdeg = mono_deg(lead.data(), nv);

    // Gebauer-Moller B criterion on old pairs: drop (i,j) whose lcm is a
    // proper multiple of lead through both sides.
    std::vector<Pair> keep;
    keep.reserve(P.size());
    for (Pair& pr : P) {
      bool drop = false;
      if ((hmask & ~pr.mask) == 0 && mono_divides(lead.data(), pr.lcm.data(), nv)) {
        Mono l_it(nv), l_jt(nv);
        mono_lcm(G[pr.i].lead.data(), lead.data(), l_it.data(), nv);
        mono_lcm(G[pr.j].lead.data(), lead.data(), l_jt.data(), nv);
        if (!mono_equal(l_it.data(), pr.lcm.data(), nv) &&
            !mono_equal(l_jt.data(), pr.lcm.data(), nv))
          drop = true;
      }
      if (!drop) keep.push_back(std::move(pr));
    }
    P = std::move(keep);

    // Candidate new pairs (i, t) for non-redundant i.
    struct Cand {
      int i;
      Mono lcm;
      int deg;
      bool coprime;
      uint64_t mask;
      bool alive = true;
    };
    std::vector<Cand> cand;
    cand.reserve(G.size());
    for (int i = 0; i < t; ++i) {
      if (G[i].redundant) continue;
      Mono l(nv);
      mono_lcm(G[i].lead.data(), lead.data(), l.data(), nv);
      int d = mono_deg(l.data(), nv);
      bool cop = mono_coprime(G[i].lead.data(), lead.data(), nv);
      cand.push_back({i, std::move(l), d, cop, 0});
      cand.back().mask = var_mask(cand.back().lcm.data(), nv);
    }
    // M criterion: drop candidates whose lcm is properly divisible by
    // another candidate's lcm.
    for (auto& a : cand) {
      if (!a.alive) continue;
      for (auto& b : cand) {
        if (&a == &b || !b.alive) continue;
        if ((b.mask & ~a.mask) == 0 && mono_divides(b.lcm.data(), a.lcm.data(), nv) &&
            !mono_equal(b.lcm.data(), a.lcm.data(), nv)) {
          a.alive = false;
          break;
        }
      }
    }
    // F criterion: among equal lcms keep one (prefer a coprime representative,
    // which the product criterion then removes entirely).
    for (size_t a = 0; a < cand.size(); ++a) {
      if (!cand[a].alive) continue;
      for (size_t b = a + 1; b < cand.size(); ++b) {
        if (!cand[b].alive) continue;
        if (mono_equal(cand[a].lcm.data(), cand[b].lcm.data(), nv)) {
          if (cand[b].coprime) cand[a].coprime = true;  // either representative works
          cand[b].alive = false;
        }
      }
    }
    for (auto& c : cand) {
      if (c.alive && !c.coprime)
        P.push_back({c.i, t, std::move(c.lcm), c.deg, c.mask});
    }

    // Mark superseded leads redundant (they stay available as reducers).
    for (int i = 0; i < t; ++i) {
      if (!G[i].redundant && (hmask & ~G[i].mask) == 0 &&
          mono_divides(lead.data(), G[i].lead.data(), nv))
        G[i].redundant = true;
    }
    G.push_back({std::move(h), std::move(lead), hmask, hdeg, false});
  };

  for (const Poly& g0 : gens) {
    if (g0.zero()) continue;
    Poly g = g0.resorted(ord);
    add_pairs_and_element(poly_monic(F, g));
  }

  std::vector<Poly> reducers;
  auto current_reducers = [&]() {
    reducers.clear();
    for (auto& e : G) reducers.push_back(e.p);
    return reducers;
  };

  long long processed = 0;
  while (!P.empty()) {
    // Normal selection: minimal lcm degree, then order on lcm, then indices.
    size_t best = 0;
    for (size_t k = 1; k < P.size(); ++k) {
      const Pair &a = P[k], &b = P[best];
      int c = (a.deg != b.deg) ? (a.deg < b.deg ? -1 : 1) : ord.cmp(a.lcm.data(), b.lcm.data(), nv);
      if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
    }
    Pair pr = std::move(P[best]);
    P.erase(P.begin() + best);

    if (pr.deg > caps.max_degree)
      throw CapExceeded("groebner: S-pair degree " + std::to_string(pr.deg) +
                        " exceeds cap " + std::to_string(caps.max_degree) +
                        " (computation too large)");
    if (++processed > caps.max_pairs)
      throw CapExceeded("groebner: processed S-pair count exceeds cap " +
                        std::to_string(caps.max_pairs) + " (computation too large)");

    Poly s = spoly(F, ord, G[pr.i].p, G[pr.j].p, pr.lcm);
    if (s.zero()) continue;
    Poly r = normal_form(ring, s, current_reducers(), ord);
    if (r.zero()) continue;
    add_pairs_and_element(poly_monic(F, r));
  }

  // Reduced basis: minimal leads, fully reduced tails, monic, sorted.
  std::vector<Poly> min_basis;
  for (size_t i = 0; i < G.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      if ((G[j].mask & ~G[i].mask) == 0 && mono_divides(G[j].lead.data(), G[i].lead.data(), nv)) {
        if (!mono_equal(G[j].lead.data(), G[i].lead.data(), nv) || j < i) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) min_basis.push_back(G[i].p);
  }
  std::vector<Poly> out;
  out.reserve(min_basis.size());
  for (size_t i = 0; i < min_basis.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(min_basis.size() - 1);
    for (size_t j = 0; j < min_basis.size(); ++j)
      if (j != i) others.push_back(min_basis[j]);
    Poly r = normal_form(ring, min_basis[i], others, ord);
    if (!r.zero()) out.push_back(poly_monic(F, r));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(a.lm(), b.lm(), nv);
  });
  return out;
}

Ideal::Ideal(const Ring& ring, std::vector<Poly> gens, bool require_homogeneous)
    : ring_(ring) {
  for (Poly& g : gens) {
    if (g.zero()) continue;
    if (g.nvars() != ring.nvars) throw DomainError("ideal generator in wrong ring");
    if (require_homogeneous && !g.homogeneous())
      throw DomainError("ideal generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const Order& ord, const Caps& caps) const {
  auto key = std::make_pair(int(ord.kind), ord.block);
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->m.find(key);
    if (it != cache_->m.end()) return it->second;
  }
  auto gb = std::make_shared<GroebnerBasis>();
  gb->ord = ord;
  gb->g = buchberger(ring_, gens_, ord, caps);
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto [it, inserted] = cache_->m.emplace(key, gb);
  return it->second;
}

std::vector<Mono> Ideal::lead_monomials(const Caps& caps) const {
  auto gb = groebner(Order::grevlex(), caps);
  std::vector<Mono> out;
  out.reserve(gb->g.size());
  for (const Poly& g : gb->g) out.emplace_back(g.lm(), g.lm() + ring_.nvars);
  return out;
}

Poly Ideal::reduce(const Poly& f, const Caps& caps) const {
  auto gb = groebner(Order::grevlex(), caps);
  return normal_form(ring_, f.resorted(Order::grevlex()), gb->g, Order::grevlex());
}

bool Ideal::contains(const Poly& f, const Caps& caps) const { return reduce(f, caps).zero(); }

bool ideal_contains(const Ideal& a, const Ideal& b, const Caps& caps) {
  if (a.ring() != b.ring()) throw DomainError("ideal_contains: ring mismatch");
  for (const Poly& g : b.gens())
    if (!a.contains(g, caps)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Caps& caps) {
  return ideal_contains(a, b, caps) && ideal_contains(b, a, caps);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw DomainError("ideal_sum: ring mismatch");
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal irrelevant_ideal(const Ring& ring) {
  std::vector<Poly> gens;
  for (int i = 0; i < ring.nvars; ++i) gens.push_back(poly_var(ring.nvars, i));
  return Ideal(ring, std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const Caps& caps) {
  int nv = I.nvars();
  int k = int(drop.size());
  if (k == 0) return I;
  std::vector<bool> dropped(nv, false);
  for (int d : drop) {
    if (d < 0 || d >= nv || dropped[d]) throw DomainError("eliminate: bad variable list");
    dropped[d] = true;
  }
  // Permute dropped variables to the front.
  std::vector<int> perm(nv, -1);  // old index -> new index
  int front = 0, back = k;
  for (int i = 0; i < nv; ++i) perm[i] = dropped[i] ? front++ : back++;
  Order ord = Order::elim(k);
  std::vector<Poly> permuted;
  permuted.reserve(I.gens().size());
  for (const Poly& g : I.gens()) permuted.push_back(poly_rename_vars(g, perm, nv, I.ring().F, ord));

  std::vector<Poly> gb = buchberger(I.ring(), permuted, ord, caps);

  // Keep elements free of the front block; compact to the kept variables.
  std::vector<int> keep_map(nv, -1);  // permuted index -> output index
  for (int i = k; i < nv; ++i) keep_map[i] = i - k;
  Ring out_ring(I.ring().F, nv - k);
  std::vector<Poly> kept;
  for (const Poly& g : gb) {
    bool free_of_front = true;
    for (int t = 0; t < g.nterms() && free_of_front; ++t) {
      const Exp* m = g.mono(t);
      for (int i = 0; i < k; ++i)
        if (m[i]) {
          free_of_front = false;
          break;
        }
    }
    if (free_of_front)
      kept.push_back(poly_rename_vars(g, keep_map, nv - k, out_ring.F, Order::grevlex()));
  }
  return Ideal(out_ring, std::move(kept), false);
}

Ideal ideal_linear_change(const Ideal& I, const MatFp& A, const Caps&) {
  int nv = I.nvars();
  if (A.rows() != nv || A.cols() != nv) throw DomainError("linear change: wrong matrix shape");
  if (mat_det(I.ring().F, A) == 0) throw DomainError("linear change of coordinates is singular");
  std::vector<std::vector<uint32_t>> M(nv, std::vector<uint32_t>(nv));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) M[i][j] = A.at(i, j);
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const Poly& g : I.gens())
    gens.push_back(poly_compose_linear(I.ring().F, Order::grevlex(), g, M, nv));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_rename_vars(const Ideal& I, const std::vector<int>& var_map, int nv_out) {
  Ring out_ring(I.ring().F, nv_out);
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const Poly& g : I.gens())
    gens.push_back(poly_rename_vars(g, var_map, nv_out, out_ring.F, Order::grevlex()));
  return Ideal(out_ring, std::move(gens), false);
}

MonomialIndex::MonomialIndex(int nvars, int degree) : nv_(nvars) {
  list_ = monomials_of_degree(nvars, degree, Order::grevlex());
  for (long long i = 0; i < (long long)list_.size(); ++i) pos_[list_[i]] = i;
}

long long MonomialIndex::index_of(const Exp* m) const {
  Mono key(m, m + nv_);
  auto it = pos_.find(key);
  return it == pos_.end() ? -1 : it->second;
}

std::vector<uint32_t> poly_to_vector(const Poly& f, const MonomialIndex& ix) {
  std::vector<uint32_t> v(size_t(ix.size()), 0);
  for (int t = 0; t < f.nterms(); ++t) {
    long long k = ix.index_of(f.mono(t));
    if (k < 0) throw DomainError("poly_to_vector: monomial outside the graded slice");
    v[size_t(k)] = f.coeff(t);
  }
  return v;
}

Poly vector_to_poly(const std::vector<uint32_t>& v, const MonomialIndex& ix, int nv,
                    const Fp& F, const Order& ord) {
  Poly p(nv);
  for (long long i = 0; i < ix.size(); ++i) {
    if (v[size_t(i)]) p.push_term(v[size_t(i)], ix.list()[size_t(i)]);
  }
  p.normalize(F, ord);
  return p;
}

GradedPiece graded_piece(const Ideal& I, int d, const Caps& caps) {
  for (const Poly& g : I.gens())
    if (!g.homogeneous()) throw DomainError("graded_piece requires a homogeneous ideal");
  int nv = I.nvars();
  MonomialIndex ix(nv, d);
  GradedPiece out;
  out.degree = d;
  out.ambient_dim = ix.size();
  auto gb = I.groebner(Order::grevlex(), caps);
  long long rows = 0;
  for (const Poly& g : gb->g)
    if (g.deg() <= d) rows += count_monomials(nv, d - g.deg());
  if (rows * ix.size() > caps.max_matrix)
    throw CapExceeded("graded_piece: matrix " + std::to_string(rows) + "x" +
                      std::to_string(ix.size()) + " exceeds cap");
  EchelonBuilder ech(I.ring().F, int(ix.size()));
  for (const Poly& g : gb->g) {
    int gd = g.deg();
    if (gd > d) continue;
    for (const Mono& m : monomials_of_degree(nv, d - gd, Order::grevlex())) {
      Poly prod = poly_mul_term(I.ring().F, g, 1, m.data());
      ech.add_row(poly_to_vector(prod, ix));
    }
  }
  for (const auto& row : ech.rows())
    out.basis.push_back(vector_to_poly(row, ix, nv, I.ring().F, Order::grevlex()));
  return out;
}

long long graded_dim(const Ideal& I, int d, const Caps& caps) {
  return (long long)graded_piece(I, d, caps).basis.size();
}

}  // namespace sforge
