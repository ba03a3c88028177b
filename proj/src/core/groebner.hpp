#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "core/linalg.hpp"
#include "core/poly.hpp"

namespace sforge {

/// Resource caps. Exceeding any of them raises CapExceeded with a precise
/// report; results are never silently truncated.
struct Caps {
  int max_degree = 40;              // highest S-pair lcm degree Buchberger may process
  long long max_pairs = 2000000;    // S-pairs processed in one basis computation
  long long max_matrix = 20000000;  // entries (rows*cols) of any dense matrix / Koszul block
};

struct GroebnerBasis {
  Order ord;
  std::vector<Poly> g;  // monic, interreduced, sorted ascending by leading monomial
};

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
std::vector<Poly> buchberger(const Ring& ring, const std::vector<Poly>& gens, const Order& ord,
                             const Caps& caps);

/// Total-reduction normal form of f against basis (sorted or not; leading
/// terms are scanned in the given sequence, first divisor wins).
Poly normal_form(const Ring& ring, const Poly& f, const std::vector<Poly>& basis,
                 const Order& ord);

/// A homogeneous ideal with a per-order Groebner cache. Value semantics;
/// copies share the (mutex-guarded) cache, which is safe because ideals are
/// immutable once constructed.
class Ideal {
public:
  Ideal() = default;
  Ideal(const Ring& ring, std::vector<Poly> gens, bool require_homogeneous = true);

  const Ring& ring() const { return ring_; }
  int nvars() const { return ring_.nvars; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool zero() const { return gens_.empty(); }

  /// Cached reduced Groebner basis under ord.
  std::shared_ptr<const GroebnerBasis> groebner(const Order& ord, const Caps& caps = {}) const;

  /// Leading-term monomials of the grevlex basis (for Hilbert data).
  std::vector<Mono> lead_monomials(const Caps& caps = {}) const;

  Poly reduce(const Poly& f, const Caps& caps = {}) const;  // grevlex normal form
  bool contains(const Poly& f, const Caps& caps = {}) const;

private:
  Ring ring_;
  std::vector<Poly> gens_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::shared_ptr<const GroebnerBasis>> m;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool ideal_contains(const Ideal& a, const Ideal& b, const Caps& caps = {});  // b ⊆ a
bool ideal_equal(const Ideal& a, const Ideal& b, const Caps& caps = {});

/// Ideal generated by both gen sets.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// The irrelevant ideal (x0..xr): defines the empty subscheme of P^r.
Ideal irrelevant_ideal(const Ring& ring);

/// Eliminate the variables in `drop` (indices into the ring): compute a
/// Groebner basis under a block order with `drop` in front and keep the
/// polynomials free of those variables, re-indexed into a ring on the
/// remaining variables (original relative order).
Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const Caps& caps = {});

/// Apply an invertible linear change of coordinates: generators f become
/// f(A x). Throws DomainError if A is singular.
Ideal ideal_linear_change(const Ideal& I, const MatFp& A, const Caps& caps = {});

/// Re-embed an ideal along a variable injection (e.g. subring S_z ⊂ S):
/// var i of I's ring becomes var_map[i] in the new ring.
Ideal ideal_rename_vars(const Ideal& I, const std::vector<int>& var_map, int nv_out);

/// Echelonized basis of the degree-d graded piece I_d (homogeneous I):
/// products of Groebner elements by complementary-degree monomials, row
/// reduced over the canonical degree-d monomial basis. Exact dimension.
struct GradedPiece {
  int degree = 0;
  long long ambient_dim = 0;       // dim S_d
  std::vector<Poly> basis;         // echelon basis of I_d
};
GradedPiece graded_piece(const Ideal& I, int d, const Caps& caps = {});
long long graded_dim(const Ideal& I, int d, const Caps& caps = {});

/// Index of a monomial in the canonical (grevlex-descending) degree-d list.
class MonomialIndex {
public:
  MonomialIndex(int nvars, int degree);
  long long size() const { return (long long)list_.size(); }
  const std::vector<Mono>& list() const { return list_; }
  long long index_of(const Exp* m) const;  // -1 if absent

private:
  int nv_;
  std::vector<Mono> list_;
  std::map<Mono, long long> pos_;
};

/// Dense coefficient vector of a homogeneous polynomial over the canonical
/// degree-d monomial basis.
std::vector<uint32_t> poly_to_vector(const Poly& f, const MonomialIndex& ix);
Poly vector_to_poly(const std::vector<uint32_t>& v, const MonomialIndex& ix, int nv,
                    const Fp& F, const Order& ord);

}  // namespace sforge
