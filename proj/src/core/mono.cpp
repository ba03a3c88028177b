#include "core/mono.hpp"

#include <algorithm>

namespace sforge {

namespace {

// Grevlex on the index window [lo, hi): higher total degree wins; on ties the
// rightmost differing exponent decides, smaller value meaning greater monomial.
int grevlex_cmp_window(const Exp* a, const Exp* b, int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int Order::cmp(const Exp* a, const Exp* b, int n) const {
  switch (kind) {
    case Grevlex:
      return grevlex_cmp_window(a, b, 0, n);
    case Lex:
      for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Elim:
    case VarFirst: {
      int k = kind == VarFirst ? 1 : block;
      if (int c = grevlex_cmp_window(a, b, 0, k)) return c;
      return grevlex_cmp_window(a, b, k, n);
    }
  }
  return 0;
}

std::string Order::name() const {
  switch (kind) {
    case Grevlex:
      return "grevlex";
    case Lex:
      return "lex";
    case Elim:
      return "elim(" + std::to_string(block) + ")";
    case VarFirst:
      return "var-first";
  }
  return "?";
}

long long count_monomials(int n, int d) {
  // C(d+n-1, n-1) with the small arguments this engine meets.
  long long num = 1;
  for (int i = 1; i <= n - 1; ++i) {
    num = num * (d + i) / i;  // exact: product of consecutive ratios of binomials
  }
  return num;
}

std::vector<Mono> monomials_of_degree(int n, int d, const Order& ord) {
  std::vector<Mono> out;
  out.reserve(size_t(count_monomials(n, d)));
  Mono cur(n, 0);
  // Enumerate all compositions of d into n parts.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = Exp(rem);
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[pos] = Exp(e);
      self(self, pos + 1, rem - e);
    }
    cur[pos] = 0;
  };
  if (n > 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) {
    return ord.greater(a.data(), b.data(), n);
  });
  return out;
}

}  // namespace sforge
