#ifndef BANDQ_PATHALG_HPP
#define BANDQ_PATHALG_HPP

#include <map>
#include <string>
#include <vector>

#include "bandq/intlattice.hpp"
#include "bandq/quiver.hpp"

namespace bandq {

/// A directed path; arrows[0] is applied first (it is the rightmost
/// factor in the written form e_k...e_1).  Length 0 = the lazy path at a
/// vertex.
struct Path {
  std::vector<int> arrows;  // arrow ids, in application order
  int src = -1;
  int dst = -1;

  int length() const { return (int)arrows.size(); }
  bool operator==(const Path&) const = default;
  bool operator<(const Path& o) const {
    if (length() != o.length()) return length() < o.length();
    if (length() == 0) return src < o.src;
    return arrows < o.arrows;
  }
};

inline constexpr long long kPathGuard = 100000;

/// All paths of length < L in canonical order (length-major, then
/// lexicographic by arrow id sequence; lazy paths by vertex).
std::vector<Path> enumerate_paths(const Quiver& q, int L);

/// The finite-rank truncation ZQ / J^L with basis the paths of length
/// < L; products concatenate when composable and the total length stays
/// below the cutoff, and are zero otherwise.
struct TruncatedPathAlgebra {
  Quiver quiver;
  int cutoff = 0;
  std::vector<Path> basis;
  std::map<Path, int> index;

  static TruncatedPathAlgebra build(const Quiver& q, int L);

  int rank() const { return (int)basis.size(); }
  /// Index of basis[i]*basis[j] (i after j), or -1 when the product is 0.
  int mul(int i, int j) const;
  /// Bilinear product of coefficient vectors.
  IntVec multiply(const IntVec& u, const IntVec& v) const;
  std::string path_name(int i) const;
};

}  // namespace bandq

#endif
