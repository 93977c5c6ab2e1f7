#ifndef BANDQ_CW_HPP
#define BANDQ_CW_HPP

#include <optional>
#include <vector>

#include "bandq/presentation.hpp"

namespace bandq {

inline constexpr int kSignSearchGuard = 20;  // max arrows for the search

struct CwReport {
  bool graded_ok = false;
  bool two_cover_ok = false;
  bool quiver_is_hasse = false;
  std::optional<std::vector<int>> sign_vector;  // +1/-1 per arrow
  bool kernel_equals_r = false;
  int quotient_rank = 0;
};

/// Covering pairs of B under <=_R (left regular bands only): x covered
/// by b.
std::vector<std::pair<int, int>> covers_R(const MulTable& t);

/// Checks that B and Lambda(B) are graded with sigma rank-preserving and
/// that every b covers exactly two elements of each support covered by
/// sigma(b).  Left regular bands only.
bool two_cover_check(const MulTable& t, const SupportLattice& lat,
                     bool* graded_ok = nullptr);

/// Is Q exactly the Hasse diagram of Lambda(B), one upward arrow per
/// covering pair and nothing else?
bool quiver_is_hasse(const Quiver& q, const SupportLattice& lat);

/// Searches sign assignments s (first arrow fixed to +1) such that
/// psi_s kills the sum r of all length-2 paths, then certifies that the
/// ideal generated by r equals ker psi_s as HNF lattices.
CwReport verify_cw_theorem(const MulTable& t, const SupportLattice& lat,
                           const IdempotentSystem& idems, const Quiver& q);

}  // namespace bandq

#endif
