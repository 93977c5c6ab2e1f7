#ifndef BANDQ_PRESENTATION_HPP
#define BANDQ_PRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "bandq/pathalg.hpp"
#include "bandq/quiver.hpp"
#include "bandq/zalgebra.hpp"

namespace bandq {

/// The certified bound-quiver presentation ZB = ZQ(B)/I, realized inside
/// the truncation at L = N (the nilpotency index of J).
struct Presentation {
  Quiver quiver;
  IdempotentSystem idems;
  int cutoff = 0;              // L = N
  TruncatedPathAlgebra trunc;  // paths of length < L
  IntMatrix psi_matrix;        // rank(trunc) x n, row = psi(path)
  IntLattice kernel_lattice;   // I_L = ker psi within the truncation

  struct Certificates {
    bool surjective = false;   // psi image = Z^n
    bool i_in_j2 = false;      // kernel supported on paths of length >= 2
    bool jn_in_i = false;      // psi kills every length-N path
    bool rank_match = false;   // rank(trunc) - rank(I_L) = n
  } cert;

  /// Minimal relation generators (Tor_2 lifts), grouped by endpoint pair;
  /// vectors live over the L+1 truncation basis.
  struct RelGroup {
    int src = -1;
    int dst = -1;
    std::vector<IntVec> gens;
  };
  std::vector<RelGroup> min_generators;
  TruncatedPathAlgebra trunc_ext;  // the L+1 truncation the lifts live in
  IntLattice kernel_ext;           // I_{L+1}
  bool relations_computed = false;
  bool ideal_closure_ok = false;   // ideal generated by the lifts = I_{L+1}
};

/// The image of a single arrow: e_dst * (label - f_dst*f_src) * e_src.
AlgElem psi_arrow(const MulTable& t, const SupportLattice& lat,
                  const IdempotentSystem& idems, const Arrow& a);

/// The image of a basis path of a truncation (product of arrow images;
/// lazy path -> e_X).
AlgElem psi_path(const MulTable& t, const SupportLattice& lat,
                 const IdempotentSystem& idems,
                 const TruncatedPathAlgebra& trunc, int path_index);

Presentation compute_presentation(const MulTable& t, const SupportLattice& lat,
                                  const IdempotentSystem& idems,
                                  const Quiver& q,
                                  std::optional<int> truncation_override =
                                      std::nullopt);

/// Fills min_generators and the ideal-closure certificate.
void minimal_relations(const MulTable& t, const SupportLattice& lat,
                       Presentation& pres);

struct IsoCertificate {
  bool quotient_free_of_rank_n = false;
  std::vector<Int> elementary_divisors;
  bool multiplicative = false;
  bool pass = false;
};

IsoCertificate verify_isomorphism(const MulTable& t,
                                  const SupportLattice& lat,
                                  const Presentation& pres);

/// Acyclic quiver and untruncated path count = |B| (cross-asserted with
/// I = 0).
bool hereditary_test(const Presentation& pres);

/// Per ordered support pair: (arrow count, rank of e_Y(J/J^2)e_X computed
/// by the independent lattice route, torsion-free flag).
struct Tor1Entry {
  int arrows = 0;
  int lattice_rank = 0;
  bool torsion_free = false;
};
std::map<std::pair<int, int>, Tor1Entry> tor1_table(
    const MulTable& t, const SupportLattice& lat, const Presentation& pres);

/// Two-sided ideal closure of a seed lattice within a truncation:
/// saturates under multiplication by lazy paths and arrows on both sides
/// until the HNF stabilizes.
IntLattice ideal_closure(const TruncatedPathAlgebra& trunc,
                         const IntLattice& seed);

/// J^2 as a sublattice of ZB.
IntLattice jsquared(const MulTable& t, const IntLattice& J);

/// e_Y * J * e_X + J^2, for the Tor_1 cross-check.
IntLattice peirce_j_plus_j2(const MulTable& t, const IdempotentSystem& idems,
                            const IntLattice& J2, int Y, int X);

std::string relation_report(const MulTable& t, const Presentation& pres);

}  // namespace bandq

#endif
