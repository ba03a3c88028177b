#include "core/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace sforge {

namespace {

long long chk_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError("hilbert: integer overflow in addition");
  return r;
}

long long chk_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError("hilbert: integer overflow in multiplication");
  return r;
}

}  // namespace

TPoly tpoly_trim(TPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

TPoly tpoly_add(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = chk_add(r[i], b[i]);
  return tpoly_trim(std::move(r));
}

TPoly tpoly_sub(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = chk_add(r[i], -b[i]);
  return tpoly_trim(std::move(r));
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = chk_add(r[i + j], chk_mul(a[i], b[j]));
  }
  return tpoly_trim(std::move(r));
}

TPoly tpoly_shift(const TPoly& a, int k) {
  if (a.empty()) return {};
  TPoly r(a.size() + size_t(k), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + size_t(k)] = a[i];
  return r;
}

bool tpoly_equal(const TPoly& a, const TPoly& b) {
  return tpoly_trim(a) == tpoly_trim(b);
}

long long tpoly_eval1(const TPoly& a) {
  long long s = 0;
  for (long long c : a) s = chk_add(s, c);
  return s;
}

long long tpoly_deriv_eval1(const TPoly& a) {
  long long s = 0;
  for (size_t i = 1; i < a.size(); ++i)
    s = chk_add(s, chk_mul((long long)i, a[i]));
  return s;
}

std::string tpoly_to_string(const TPoly& a) {
  TPoly p = tpoly_trim(a);
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    long long c = p[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long ac = c < 0 ? -c : c;
    if (i == 0) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

long long binom(long long n, int k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = int(n - k);
  __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;  // exact: r is C(n-k+j, j) after this step
  }
  if (r > __int128(INT64_MAX))
    throw DomainError("binom: result exceeds 64 bits");
  return (long long)r;
}

long long binom_poly(long long x, int m) {
  if (m < 0) return 0;
  __int128 r = 1;
  for (int j = 1; j <= m; ++j) {
    r *= (x + j);
    r /= j;  // exact: products of consecutive integers over j! stay integral
    if (r > __int128(INT64_MAX) || r < -__int128(INT64_MAX))
      throw DomainError("binom_poly: intermediate exceeds 64 bits");
  }
  return (long long)r;
}

namespace {

// Remove monomials divisible by another list member; sort by degree.
void minimalize(std::vector<Mono>& gens, int nv) {
  std::sort(gens.begin(), gens.end(), [&](const Mono& a, const Mono& b) {
    int da = mono_deg(a.data(), nv), db = mono_deg(b.data(), nv);
    if (da != db) return da < db;
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mono> kept;
  for (const Mono& m : gens) {
    bool red = false;
    for (const Mono& k : kept)
      if (mono_divides(k.data(), m.data(), nv)) {
        red = true;
        break;
      }
    if (!red) kept.push_back(m);
  }
  gens.swap(kept);
}

struct HilbertWorker {
  int nv;
  long long nodes = 0;
  static constexpr long long kNodeCap = 20000000;

  // Numerator of the monomial ideal generated by `gens` (assumed minimal).
  TPoly run(std::vector<Mono> gens) {
    if (++nodes > kNodeCap)
      throw CapExceeded("hilbert_numerator: recursion budget exceeded");
    if (gens.empty()) return TPoly{1};
    // Unit ideal: the quotient is the zero ring, series 0.
    if (mono_deg(gens[0].data(), nv) == 0) return TPoly{};
    if (gens.size() == 1) {
      TPoly r(size_t(mono_deg(gens[0].data(), nv)) + 1, 0);
      r[0] = 1;
      r.back() = chk_add(r.back(), -1);
      return tpoly_trim(std::move(r));
    }

    // Split into support-connected components: disjoint variable supports
    // multiply at the numerator level.
    {
      std::vector<int> comp(size_t(nv), -1);
      int ncomp = 0;
      std::vector<int> gen_comp(gens.size(), -1);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int mine = -1;
        for (int v = 0; v < nv; ++v) {
          if (gens[gi][size_t(v)] == 0) continue;
          if (comp[size_t(v)] >= 0 && mine < 0) mine = comp[size_t(v)];
        }
        if (mine < 0) mine = ncomp++;
        gen_comp[gi] = mine;
        for (int v = 0; v < nv; ++v)
          if (gens[gi][size_t(v)] != 0) {
            int old = comp[size_t(v)];
            comp[size_t(v)] = mine;
            if (old >= 0 && old != mine) {
              // Merge: relabel everything tagged `old`.
              for (int w = 0; w < nv; ++w)
                if (comp[size_t(w)] == old) comp[size_t(w)] = mine;
              for (size_t gj = 0; gj < gi; ++gj)
                if (gen_comp[gj] == old) gen_comp[gj] = mine;
            }
          }
      }
      std::map<int, std::vector<Mono>> buckets;
      for (size_t gi = 0; gi < gens.size(); ++gi)
        buckets[gen_comp[gi]].push_back(gens[gi]);
      if (buckets.size() > 1) {
        TPoly acc{1};
        for (auto& [c, part] : buckets) acc = tpoly_mul(acc, run(std::move(part)));
        return acc;
      }
    }

    // All generators are powers of single variables (each variable at most
    // once by minimality): the numerator is a product of (1 - t^a).
    bool all_pure = true;
    for (const Mono& m : gens) {
      int supp = 0;
      for (int v = 0; v < nv; ++v)
        if (m[size_t(v)] != 0) ++supp;
      if (supp != 1) {
        all_pure = false;
        break;
      }
    }
    if (all_pure) {
      TPoly acc{1};
      for (const Mono& m : gens) {
        int d = mono_deg(m.data(), nv);
        TPoly f(size_t(d) + 1, 0);
        f[0] = 1;
        f.back() = chk_add(f.back(), -1);
        acc = tpoly_mul(acc, f);
      }
      return acc;
    }

    // Pivot: most frequent variable, median positive exponent.
    int best_v = -1, best_count = -1;
    for (int v = 0; v < nv; ++v) {
      int cnt = 0;
      for (const Mono& m : gens)
        if (m[size_t(v)] != 0) ++cnt;
      if (cnt > best_count) {
        best_count = cnt;
        best_v = v;
      }
    }
    std::vector<int> exps;
    for (const Mono& m : gens)
      if (m[size_t(best_v)] != 0) exps.push_back(int(m[size_t(best_v)]));
    std::sort(exps.begin(), exps.end());
    int e = exps[exps.size() / 2];
    // If x_v^e is itself a generator, the sum branch would not shrink; the
    // minimum positive exponent always does (it belongs to a mixed
    // generator, since two pure powers of one variable cannot both be
    // minimal and singleton components were split off above).
    {
      Mono pure(size_t(nv), 0);
      pure[size_t(best_v)] = Exp(e);
      if (std::find(gens.begin(), gens.end(), pure) != gens.end()) e = exps[0];
    }

    // N(I) = N(I + (x_v^e)) + t^e * N(I : x_v^e).
    std::vector<Mono> sum_gens;
    for (const Mono& m : gens)
      if (int(m[size_t(best_v)]) < e) sum_gens.push_back(m);
    Mono pivot(size_t(nv), 0);
    pivot[size_t(best_v)] = Exp(e);
    sum_gens.push_back(pivot);
    minimalize(sum_gens, nv);

    std::vector<Mono> colon_gens = gens;
    for (Mono& m : colon_gens) {
      int cur = int(m[size_t(best_v)]);
      m[size_t(best_v)] = Exp(cur > e ? cur - e : 0);
    }
    minimalize(colon_gens, nv);

    return tpoly_add(run(std::move(sum_gens)),
                     tpoly_shift(run(std::move(colon_gens)), e));
  }
};

}  // namespace

TPoly hilbert_numerator(std::vector<Mono> gens, int nvars) {
  for (const Mono& m : gens)
    if (int(m.size()) != nvars)
      throw DomainError("hilbert_numerator: monomial arity mismatch");
  minimalize(gens, nvars);
  HilbertWorker w{nvars};
  return w.run(std::move(gens));
}

std::vector<long long> HilbertData::function_values(int dmax) const {
  std::vector<long long> v(size_t(dmax) + 1, 0);
  for (size_t i = 0; i < numerator.size() && i <= size_t(dmax); ++i)
    v[i] = numerator[i];
  for (int pass = 0; pass < nvars; ++pass)
    for (int d = 1; d <= dmax; ++d)
      v[size_t(d)] = chk_add(v[size_t(d)], v[size_t(d) - 1]);
  return v;
}

long long HilbertData::polynomial_value(long long d) const {
  if (krull_dim <= 0) return 0;
  long long s = 0;
  for (size_t i = 0; i < reduced.size(); ++i)
    s = chk_add(s, chk_mul(reduced[i],
                           binom_poly(d - (long long)i, krull_dim - 1)));
  return s;
}

int HilbertData::polynomial_agreement_from() const {
  if (krull_dim < 0) return 0;
  int start = std::max(0, int(reduced.size()) - krull_dim);
  // (deg Q) - krull_dim + 1 = reduced.size() - 1 - krull_dim + 1.
  auto fv = function_values(start);
  int d0 = start;
  while (d0 > 0 && fv[size_t(d0) - 1] == polynomial_value(d0 - 1)) --d0;
  return d0;
}

std::string HilbertData::series_string() const {
  if (reduced.empty()) return "0";
  std::string q = tpoly_to_string(reduced);
  if (krull_dim == 0) return q;
  return "(" + q + ") / (1-t)^" + std::to_string(krull_dim);
}

HilbertData hilbert_data_from_leads(std::vector<Mono> leads, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = hilbert_numerator(std::move(leads), nvars);
  TPoly q = h.numerator;
  int cancels = 0;
  while (!q.empty() && tpoly_eval1(q) == 0) {
    // Exact division by (1 - t): running prefix sums, last one (= q(1)) is 0.
    TPoly next(q.size() - 1, 0);
    long long acc = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      acc = chk_add(acc, q[i]);
      next[i] = acc;
    }
    q = tpoly_trim(std::move(next));
    ++cancels;
  }
  h.reduced = q;
  if (q.empty()) {
    h.krull_dim = -1;  // zero ring
    h.proj_dim = -2;
    h.codim = nvars;
    h.degree = 0;
  } else {
    h.krull_dim = nvars - cancels;
    h.proj_dim = h.krull_dim - 1;
    h.codim = (nvars - 1) - h.proj_dim;
    h.degree = h.proj_dim >= 0 ? tpoly_eval1(q) : 0;
  }
  if (h.proj_dim >= 0) {
    // chi_k = sum_j (-1)^j C(k, j) P(-j), P evaluated via the reduced form.
    int n = h.proj_dim;
    auto pval = [&](long long m) { return h.polynomial_value(m); };
    h.chi.assign(size_t(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
      long long s = 0;
      for (int j = 0; j <= k; ++j) {
        long long term = chk_mul(binom(k, j), pval(-j));
        s = chk_add(s, (j % 2 == 0) ? term : -term);
      }
      h.chi[size_t(k)] = s;
    }
  }
  if (h.proj_dim >= 1) {
    h.sectional_genus = chk_add(1, -h.chi[size_t(h.proj_dim) - 1]);
    h.genus_defined = true;
  }
  return h;
}

HilbertData hilbert_data(const Ideal& I, const Caps& caps) {
  auto gb = I.groebner(Order::grevlex(), caps);
  std::vector<Mono> leads;
  leads.reserve(gb->g.size());
  for (const Poly& g : gb->g) {
    leads.emplace_back(g.lm(), g.lm() + I.ring().nvars);
  }
  return hilbert_data_from_leads(std::move(leads), I.ring().nvars);
}

}  // namespace sforge
