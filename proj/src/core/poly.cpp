#include "core/poly.hpp"

#include <algorithm>
#include <numeric>

namespace sforge {

int Poly::deg() const {
  int d = 0;
  for (int i = 0; i < nterms(); ++i) d = std::max(d, term_deg(i));
  return d;
}

bool Poly::homogeneous() const {
  if (zero()) return true;
  int d = term_deg(0);
  for (int i = 1; i < nterms(); ++i)
    if (term_deg(i) != d) return false;
  return true;
}

void Poly::push_term(uint32_t c, const Exp* m) {
  cf_.push_back(c);
  ex_.insert(ex_.end(), m, m + nv_);
}

void Poly::normalize(const Fp& F, const Order& ord) {
  int n = nterms();
  if (n == 0) return;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ord.greater(mono(a), mono(b), nv_);
  });
  std::vector<uint32_t> cf;
  std::vector<Exp> ex;
  cf.reserve(n);
  ex.reserve(ex_.size());
  for (int k = 0; k < n;) {
    int i = idx[k];
    uint64_t acc = cf_[i];
    int k2 = k + 1;
    while (k2 < n && mono_equal(mono(idx[k2]), mono(i), nv_)) {
      acc += cf_[idx[k2]];
      if (acc >= (uint64_t(1) << 63)) acc = F.reduce(acc);
      ++k2;
    }
    uint32_t c = F.reduce(acc);
    if (c != 0) {
      cf.push_back(c);
      const Exp* m = mono(i);
      ex.insert(ex.end(), m, m + nv_);
    }
    k = k2;
  }
  cf_ = std::move(cf);
  ex_ = std::move(ex);
}

Poly Poly::resorted(const Order& ord) const {
  int n = nterms();
  Poly r(nv_);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ord.greater(mono(a), mono(b), nv_);
  });
  r.cf_.reserve(n);
  r.ex_.reserve(ex_.size());
  for (int i : idx) {
    r.cf_.push_back(cf_[i]);
    const Exp* m = mono(i);
    r.ex_.insert(r.ex_.end(), m, m + nv_);
  }
  return r;
}

Poly poly_from_raw(int nv, std::vector<uint32_t> cf, std::vector<Exp> ex) {
  Poly p(nv);
  p.cf_ = std::move(cf);
  p.ex_ = std::move(ex);
  return p;
}

Poly poly_add(const Fp& F, const Order& ord, const Poly& a, const Poly& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  int nv = a.nvars();
  std::vector<uint32_t> cf;
  std::vector<Exp> ex;
  cf.reserve(a.nterms() + b.nterms());
  ex.reserve((a.nterms() + b.nterms()) * size_t(nv));
  int i = 0, j = 0;
  while (i < a.nterms() || j < b.nterms()) {
    int c;
    if (i >= a.nterms())
      c = -1;
    else if (j >= b.nterms())
      c = 1;
    else
      c = ord.cmp(a.mono(i), b.mono(j), nv);
    if (c > 0) {
      cf.push_back(a.coeff(i));
      ex.insert(ex.end(), a.mono(i), a.mono(i) + nv);
      ++i;
    } else if (c < 0) {
      cf.push_back(b.coeff(j));
      ex.insert(ex.end(), b.mono(j), b.mono(j) + nv);
      ++j;
    } else {
      uint32_t s = F.add(a.coeff(i), b.coeff(j));
      if (s) {
        cf.push_back(s);
        ex.insert(ex.end(), a.mono(i), a.mono(i) + nv);
      }
      ++i;
      ++j;
    }
  }
  return poly_from_raw(nv, std::move(cf), std::move(ex));
}

Poly poly_neg(const Fp& F, const Poly& a) {
  std::vector<uint32_t> cf(a.coeffs());
  for (auto& c : cf) c = F.neg(c);
  return poly_from_raw(a.nvars(), std::move(cf), a.exps());
}

Poly poly_sub(const Fp& F, const Order& ord, const Poly& a, const Poly& b) {
  return poly_add(F, ord, a, poly_neg(F, b));
}

Poly poly_scale(const Fp& F, const Poly& a, uint32_t c) {
  if (c == 0) return Poly(a.nvars());
  std::vector<uint32_t> cf(a.coeffs());
  for (auto& v : cf) v = F.mul(v, c);
  return poly_from_raw(a.nvars(), std::move(cf), a.exps());
}

Poly poly_mul_term(const Fp& F, const Poly& a, uint32_t c, const Exp* m) {
  if (c == 0) return Poly(a.nvars());
  int nv = a.nvars();
  std::vector<uint32_t> cf(a.coeffs());
  std::vector<Exp> ex(a.exps());
  for (auto& v : cf) v = F.mul(v, c);
  for (size_t t = 0; t < cf.size(); ++t)
    for (int k = 0; k < nv; ++k) ex[t * nv + k] = Exp(ex[t * nv + k] + m[k]);
  return poly_from_raw(nv, std::move(cf), std::move(ex));
}

Poly poly_mul(const Fp& F, const Order& ord, const Poly& a, const Poly& b) {
  int nv = a.nvars();
  Poly acc(nv);
  for (int i = 0; i < a.nterms(); ++i) {
    for (int j = 0; j < b.nterms(); ++j) {
      Mono m(nv);
      mono_mul(a.mono(i), b.mono(j), m.data(), nv);
      acc.push_term(F.mul(a.coeff(i), b.coeff(j)), m);
    }
  }
  acc.normalize(F, ord);
  return acc;
}

Poly poly_monic(const Fp& F, const Poly& a) {
  if (a.zero() || a.lc() == 1) return a;
  return poly_scale(F, a, F.inv(a.lc()));
}

Poly poly_derivative(const Fp& F, const Poly& a, int var) {
  int nv = a.nvars();
  std::vector<uint32_t> cf;
  std::vector<Exp> ex;
  for (int i = 0; i < a.nterms(); ++i) {
    const Exp* m = a.mono(i);
    if (m[var] == 0) continue;
    uint32_t c = F.mul(a.coeff(i), uint32_t(m[var] % F.p()));
    if (c == 0) continue;
    cf.push_back(c);
    size_t base = ex.size();
    ex.insert(ex.end(), m, m + nv);
    ex[base + var] -= 1;
  }
  return poly_from_raw(nv, std::move(cf), std::move(ex));
}

uint32_t poly_eval(const Fp& F, const Poly& a, const std::vector<uint32_t>& coords) {
  if (int(coords.size()) != a.nvars())
    throw DomainError("evaluation point has wrong coordinate count");
  uint64_t acc = 0;
  for (int i = 0; i < a.nterms(); ++i) {
    uint32_t t = a.coeff(i);
    const Exp* m = a.mono(i);
    for (int k = 0; k < a.nvars(); ++k) {
      if (m[k]) t = F.mul(t, F.pow(coords[k], m[k]));
    }
    acc += t;
    if (acc >= (uint64_t(1) << 63)) acc = F.reduce(acc);
  }
  return F.reduce(acc);
}

Poly poly_compose_linear(const Fp& F, const Order& ord, const Poly& a,
                         const std::vector<std::vector<uint32_t>>& M, int nv_out) {
  int nv = a.nvars();
  if (int(M.size()) != nv) throw DomainError("substitution matrix has wrong row count");
  // Linear forms L_i and a per-variable power cache.
  std::vector<Poly> lin(nv, Poly(nv_out));
  for (int i = 0; i < nv; ++i) {
    Poly L(nv_out);
    Mono unit(nv_out, 0);
    for (int j = 0; j < nv_out; ++j) {
      if (M[i][j]) {
        unit[j] = 1;
        L.push_term(M[i][j], unit);
        unit[j] = 0;
      }
    }
    L.normalize(F, ord);
    lin[i] = std::move(L);
  }
  std::vector<std::vector<Poly>> pow(nv);  // pow[i][k] = L_i^k
  for (int i = 0; i < nv; ++i) pow[i].push_back(poly_one(F, nv_out));

  Poly total(nv_out);
  for (int t = 0; t < a.nterms(); ++t) {
    Poly term = poly_const(F, nv_out, a.coeff(t));
    const Exp* m = a.mono(t);
    for (int i = 0; i < nv; ++i) {
      int e = m[i];
      if (e == 0) continue;
      auto& pw = pow[i];
      while (int(pw.size()) <= e) pw.push_back(poly_mul(F, ord, pw.back(), lin[i]));
      term = poly_mul(F, ord, term, pw[e]);
    }
    for (int k = 0; k < term.nterms(); ++k) total.push_term(term.coeff(k), term.mono(k));
  }
  total.normalize(F, ord);
  return total;
}

Poly poly_rename_vars(const Poly& a, const std::vector<int>& var_map, int nv_out,
                      const Fp& F, const Order& ord) {
  int nv = a.nvars();
  Poly r(nv_out);
  Mono m_out(nv_out, 0);
  for (int i = 0; i < a.nterms(); ++i) {
    const Exp* m = a.mono(i);
    std::fill(m_out.begin(), m_out.end(), Exp(0));
    for (int k = 0; k < nv; ++k) {
      if (m[k] == 0) continue;
      if (var_map[k] < 0)
        throw DomainError("poly_rename_vars: dropped variable occurs in polynomial");
      m_out[var_map[k]] = Exp(m_out[var_map[k]] + m[k]);
    }
    r.push_term(a.coeff(i), m_out);
  }
  r.normalize(F, ord);
  return r;
}

Poly poly_one(const Fp& F, int nv) { return poly_const(F, nv, 1); }

Poly poly_var(int nv, int i) {
  Poly p(nv);
  Mono m(nv, 0);
  m[i] = 1;
  p.push_term(1, m);
  return p;
}

Poly poly_const(const Fp& F, int nv, uint32_t c) {
  Poly p(nv);
  if (c % F.p() != 0) {
    Mono m(nv, 0);
    p.push_term(c % F.p(), m);
  }
  return p;
}

bool poly_equal(const Poly& a, const Poly& b) {
  return a.nvars() == b.nvars() && a.coeffs() == b.coeffs() && a.exps() == b.exps();
}

}  // namespace sforge
