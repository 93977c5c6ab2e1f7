#ifndef BANDQ_INTLATTICE_HPP
#define BANDQ_INTLATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "bandq/errors.hpp"

namespace bandq {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Dense arbitrary-precision integer matrix, row major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<IntVec> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(r, IntVec(c, 0)) {}

  Int& operator()(int i, int j) { return a[i][j]; }
  const Int& operator()(int i, int j) const { return a[i][j]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntVec row_times_mat(const IntVec& v, const IntMatrix& M);

/// A finitely generated subgroup of Z^d, kept in canonical row-style
/// Hermite normal form: nonzero echelon rows, positive pivots, entries
/// above each pivot reduced into [0, pivot).
struct IntLattice {
  int ambient_dim = 0;
  IntMatrix basis;  // rank x ambient_dim, canonical HNF

  int rank() const { return basis.rows; }
  bool is_zero() const { return basis.rows == 0; }

  bool operator==(const IntLattice&) const = default;
};

/// Canonical HNF of the row span of M.
IntLattice hnf(const IntMatrix& M);

/// HNF with row transform: U*M = H where U is unimodular and H includes
/// its zero rows (H has the same shape as M up to row count).
struct HnfTransform {
  IntMatrix H;  // M.rows x M.cols, echelon with trailing zero rows
  IntMatrix U;  // M.rows x M.rows, unimodular
  int rank = 0;
};
HnfTransform hnf_transform(const IntMatrix& M);

/// The saturated left kernel {v in Z^rows : v*M = 0}, as a canonical HNF
/// lattice in Z^rows.
IntLattice kernel(const IntMatrix& M);

bool member(const IntLattice& L, const IntVec& v);

bool equal(const IntLattice& L1, const IntLattice& L2);

IntLattice lattice_sum(const IntLattice& L1, const IntLattice& L2);

/// Is L1 a sublattice of L2?
bool subset(const IntLattice& L1, const IntLattice& L2);

/// Reduces v modulo L (subtracting multiples of basis rows at pivot
/// columns); the result is a canonical coset representative.
IntVec reduce_mod(const IntLattice& L, IntVec v);

/// Structure of L_big / L_small.  rank = rank(L_big) - rank(L_small);
/// divisors = full SNF diagonal of the coefficient matrix of L_small in
/// the basis of L_big (so "torsion free" means all divisors are 1).
struct QuotientInfo {
  int rank = 0;
  std::vector<Int> divisors;

  bool torsion_free() const {
    for (const auto& d : divisors)
      if (d != 1) return false;
    return true;
  }
};
QuotientInfo quotient_rank(const IntLattice& L_big, const IntLattice& L_small);

/// Lifts to L_big of a generating set of L_big / L_small: one vector per
/// invariant-factor generator with divisor != 1 plus one per free
/// generator.  Lifts are reduced modulo L_small.
std::vector<IntVec> quotient_basis_lifts(const IntLattice& L_big,
                                         const IntLattice& L_small);

/// Smith normal form.  Returns the diagonal (nonnegative, each dividing
/// the next); optionally fills U, Vinv with U*M*V = D and Vinv = V^-1.
std::vector<Int> snf(IntMatrix M, IntMatrix* U = nullptr,
                     IntMatrix* Vinv = nullptr);

/// One integer solution x of x*A = c, if any.
std::optional<IntVec> solve_left(const IntMatrix& A, const IntVec& c);

/// Expresses v in the row basis of an echelon (HNF) matrix; nullopt when
/// v is not in the span over Z.
std::optional<IntVec> coords_in_basis(const IntMatrix& H, const IntVec& v);

}  // namespace bandq

#endif
