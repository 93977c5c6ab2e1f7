#ifndef BANDQ_ZALGEBRA_HPP
#define BANDQ_ZALGEBRA_HPP

#include "bandq/intlattice.hpp"
#include "bandq/multable.hpp"
#include "bandq/support.hpp"

namespace bandq {

/// An element of ZB: integer coefficient vector over the band's canonical
/// basis.
struct AlgElem {
  IntVec c;

  static AlgElem zero(int n) { return AlgElem{IntVec(n, 0)}; }
  static AlgElem basis(int n, int b) {
    AlgElem e = zero(n);
    e.c[b] = 1;
    return e;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const AlgElem&) const = default;
};

AlgElem add(const AlgElem& u, const AlgElem& v);
AlgElem sub(const AlgElem& u, const AlgElem& v);
AlgElem scale(const Int& k, const AlgElem& u);

/// Convolution product over the Cayley table.
AlgElem multiply(const MulTable& t, const AlgElem& u, const AlgElem& v);

/// The linear extension of tau to ZB, as a vector over the supports.
IntVec tau_of(const SupportLattice& lat, const AlgElem& u);

/// The ideal J = ker sigma, spanned by the differences b - f_sigma(b);
/// rank n - m.
IntLattice jradical(const MulTable& t, const SupportLattice& lat);

/// Least N with J^N = 0 (the zero ideal has index 1).  Throws
/// BoundViolated if N would exceed 2^(h+1)+1, h the longest chain length.
int nilpotency_index(const MulTable& t, const SupportLattice& lat,
                     const IntLattice& J);

long long brown_bound(const SupportLattice& lat);  // 2^(h+1)+1

/// Solves e*b = b = b*e over Z for all basis b.  The result is
/// cross-checked against connectivity (TheoremViolation on disagreement).
std::optional<AlgElem> find_identity(const MulTable& t,
                                     const SupportLattice& lat);

struct IdempotentSystem {
  std::vector<int> basepoints;     // f_X per support
  std::vector<AlgElem> idems;      // e_X per support
  AlgElem one;                     // identity of ZB
  int nilpotency = 1;              // N
  IntLattice jbasis;               // J
  bool used_lrb_fast_path = false;
};

/// Lifts the complete orthogonal idempotent system {e_X} with
/// tau(e_X) = delta_X.  Requires a connected band.  When the band is left
/// regular the recursive fast path is used unless force_generic is set;
/// both paths verify the same postconditions before returning.
IdempotentSystem lift_idempotents(const MulTable& t, const SupportLattice& lat,
                                  bool force_generic = false);

std::string alg_to_string(const MulTable& t, const AlgElem& u);

}  // namespace bandq

#endif
