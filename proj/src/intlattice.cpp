#include "bandq/intlattice.hpp"

#include <algorithm>
#include <utility>

namespace bandq {

IntMatrix identity_matrix(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) throw DimensionMismatch("mat_mul shape");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

IntVec row_times_mat(const IntVec& v, const IntMatrix& M) {
  if ((int)v.size() != M.rows) throw DimensionMismatch("row_times_mat shape");
  IntVec r(M.cols, 0);
  for (int i = 0; i < M.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < M.cols; ++j) r[j] += v[i] * M(i, j);
  }
  return r;
}

namespace {

// In-place row HNF of M, mirroring every row operation on *U when given.
// Returns the rank; rows [rank..) of M end up zero.
int hnf_in_place(IntMatrix& M, IntMatrix* U) {
  int r = 0;
  for (int col = 0; col < M.cols && r < M.rows; ++col) {
    // Clear column below row r with gcd steps (pairwise Euclid keeps the
    // intermediate entries from blowing up as badly as naive elimination).
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == -1) continue;
    std::swap(M.a[r], M.a[piv]);
    if (U) std::swap(U->a[r], U->a[piv]);
    for (int i = r + 1; i < M.rows; ++i) {
      while (M(i, col) != 0) {
        Int q = M(r, col) / M(i, col);
        for (int j = 0; j < M.cols; ++j) M(r, j) -= q * M(i, j);
        if (U)
          for (int j = 0; j < U->cols; ++j) (*U)(r, j) -= q * (*U)(i, j);
        std::swap(M.a[r], M.a[i]);
        if (U) std::swap(U->a[r], U->a[i]);
      }
    }
    if (M(r, col) < 0) {
      for (int j = 0; j < M.cols; ++j) M(r, j) = -M(r, j);
      if (U)
        for (int j = 0; j < U->cols; ++j) (*U)(r, j) = -(*U)(r, j);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q;
      // floor division
      Int num = M(i, col), den = M(r, col);
      q = num / den;
      if (num % den < 0) q -= 1;
      if (q != 0) {
        for (int j = 0; j < M.cols; ++j) M(i, j) -= q * M(r, j);
        if (U)
          for (int j = 0; j < U->cols; ++j) (*U)(i, j) -= q * (*U)(r, j);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

HnfTransform hnf_transform(const IntMatrix& M) {
  HnfTransform res;
  res.H = M;
  res.U = identity_matrix(M.rows);
  res.rank = hnf_in_place(res.H, &res.U);
  return res;
}

IntLattice hnf(const IntMatrix& M) {
  IntMatrix H = M;
  int r = hnf_in_place(H, nullptr);
  IntLattice L;
  L.ambient_dim = M.cols;
  L.basis = IntMatrix(r, M.cols);
  for (int i = 0; i < r; ++i) L.basis.a[i] = H.a[i];
  return L;
}

IntLattice kernel(const IntMatrix& M) {
  HnfTransform t = hnf_transform(M);
  IntMatrix K(M.rows - t.rank, M.rows);
  for (int i = t.rank; i < M.rows; ++i) K.a[i - t.rank] = t.U.a[i];
  return hnf(K);
}

namespace {

// Pivot column of each row of an echelon matrix.
std::vector<int> pivot_cols(const IntMatrix& H) {
  std::vector<int> p(H.rows, -1);
  for (int i = 0; i < H.rows; ++i)
    for (int j = 0; j < H.cols; ++j)
      if (H(i, j) != 0) {
        p[i] = j;
        break;
      }
  return p;
}

}  // namespace

std::optional<IntVec> coords_in_basis(const IntMatrix& H, const IntVec& v) {
  if ((int)v.size() != H.cols) throw DimensionMismatch("coords_in_basis");
  auto piv = pivot_cols(H);
  IntVec rem = v;
  IntVec y(H.rows, 0);
  for (int i = 0; i < H.rows; ++i) {
    if (piv[i] < 0) continue;
    const Int& head = rem[piv[i]];
    if (head == 0) continue;
    if (head % H(i, piv[i]) != 0) return std::nullopt;
    Int q = head / H(i, piv[i]);
    y[i] = q;
    for (int j = 0; j < H.cols; ++j) rem[j] -= q * H(i, j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return y;
}

bool member(const IntLattice& L, const IntVec& v) {
  if ((int)v.size() != L.ambient_dim) throw DimensionMismatch("member");
  return coords_in_basis(L.basis, v).has_value();
}

bool equal(const IntLattice& L1, const IntLattice& L2) {
  return L1.ambient_dim == L2.ambient_dim && L1.basis == L2.basis;
}

IntLattice lattice_sum(const IntLattice& L1, const IntLattice& L2) {
  if (L1.ambient_dim != L2.ambient_dim)
    throw DimensionMismatch("lattice_sum: ambient dims differ");
  IntMatrix M(L1.rank() + L2.rank(), L1.ambient_dim);
  for (int i = 0; i < L1.rank(); ++i) M.a[i] = L1.basis.a[i];
  for (int i = 0; i < L2.rank(); ++i) M.a[L1.rank() + i] = L2.basis.a[i];
  return hnf(M);
}

bool subset(const IntLattice& L1, const IntLattice& L2) {
  if (L1.ambient_dim != L2.ambient_dim) return false;
  for (int i = 0; i < L1.rank(); ++i)
    if (!member(L2, L1.basis.a[i])) return false;
  return true;
}

IntVec reduce_mod(const IntLattice& L, IntVec v) {
  if ((int)v.size() != L.ambient_dim) throw DimensionMismatch("reduce_mod");
  auto piv = pivot_cols(L.basis);
  for (int i = 0; i < L.basis.rows; ++i) {
    if (piv[i] < 0) continue;
    const Int& den = L.basis(i, piv[i]);
    Int q = v[piv[i]] / den;
    if (v[piv[i]] % den < 0) q -= 1;
    if (q != 0)
      for (int j = 0; j < L.ambient_dim; ++j) v[j] -= q * L.basis(i, j);
  }
  return v;
}

std::vector<Int> snf(IntMatrix M, IntMatrix* U, IntMatrix* Vinv) {
  if (U) *U = identity_matrix(M.rows);
  if (Vinv) *Vinv = identity_matrix(M.cols);

  auto row_sub = [&](int dst, int src, const Int& q) {
    for (int j = 0; j < M.cols; ++j) M(dst, j) -= q * M(src, j);
    if (U)
      for (int j = 0; j < U->cols; ++j) (*U)(dst, j) -= q * (*U)(src, j);
  };
  auto col_sub = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < M.rows; ++i) M(i, dst) -= q * M(i, src);
    // M <- M*E with E = I - q*e_src*e_dst^T, so Vinv <- E^-1 * Vinv,
    // which adds q times row dst into row src.
    if (Vinv)
      for (int j = 0; j < Vinv->cols; ++j)
        (*Vinv)(src, j) += q * (*Vinv)(dst, j);
  };
  auto row_swap = [&](int i1, int i2) {
    std::swap(M.a[i1], M.a[i2]);
    if (U) std::swap(U->a[i1], U->a[i2]);
  };
  auto col_swap = [&](int j1, int j2) {
    for (int i = 0; i < M.rows; ++i) std::swap(M(i, j1), M(i, j2));
    if (Vinv) std::swap(Vinv->a[j1], Vinv->a[j2]);
  };
  auto row_negate = [&](int i) {
    for (int j = 0; j < M.cols; ++j) M(i, j) = -M(i, j);
    if (U)
      for (int j = 0; j < U->cols; ++j) (*U)(i, j) = -(*U)(i, j);
  };

  int k = 0;
  int limit = std::min(M.rows, M.cols);
  while (k < limit) {
    // Find a nonzero entry at (i, j), i, j >= k.
    int pi = -1, pj = -1;
    for (int i = k; i < M.rows && pi < 0; ++i)
      for (int j = k; j < M.cols; ++j)
        if (M(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    row_swap(k, pi);
    col_swap(k, pj);
    // Eliminate the rest of row k and column k; repeat while both are
    // nonzero since each pass can reintroduce entries.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = k + 1; i < M.rows; ++i) {
        while (M(i, k) != 0) {
          Int q = M(k, k) / M(i, k);
          row_sub(k, i, q);
          row_swap(k, i);
          dirty = true;
        }
      }
      for (int j = k + 1; j < M.cols; ++j) {
        while (M(k, j) != 0) {
          Int q = M(k, j) / M(k, k);
          col_sub(j, k, q);
          if (M(k, j) == 0) break;
          col_swap(k, j);
          dirty = true;
        }
      }
    }
    if (M(k, k) < 0) row_negate(k);
    ++k;
  }
  // Enforce the divisibility chain d_i | d_{i+1}.
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < k; ++i) {
      if (M(i + 1, i + 1) % M(i, i) != 0) {
        // Fold M(i+1,i+1) into position (i,i) via gcd.
        // Add column i+1 to column i, then redo the 2x2 block.
        for (int r = 0; r < M.rows; ++r) M(r, i) += M(r, i + 1);
        if (Vinv)
          for (int j = 0; j < Vinv->cols; ++j)
            (*Vinv)(i + 1, j) -= (*Vinv)(i, j);
        // Now clear the block again with row/col gcd steps.
        while (M(i + 1, i) != 0 || M(i, i + 1) != 0) {
          while (M(i + 1, i) != 0) {
            Int q = M(i, i) / M(i + 1, i);
            row_sub(i, i + 1, q);
            row_swap(i, i + 1);
          }
          while (M(i, i + 1) != 0) {
            Int q = M(i, i + 1) / M(i, i);
            col_sub(i + 1, i, q);
            if (M(i, i + 1) == 0) break;
            col_swap(i, i + 1);
          }
        }
        if (M(i, i) < 0) row_negate(i);
        if (M(i + 1, i + 1) < 0) row_negate(i + 1);
        again = true;
      }
    }
  }
  std::vector<Int> d(k);
  for (int i = 0; i < k; ++i) d[i] = M(i, i);
  return d;
}

QuotientInfo quotient_rank(const IntLattice& L_big, const IntLattice& L_small) {
  if (L_big.ambient_dim != L_small.ambient_dim)
    throw DimensionMismatch("quotient_rank: ambient dims differ");
  IntMatrix C(L_small.rank(), L_big.rank());
  for (int i = 0; i < L_small.rank(); ++i) {
    auto y = coords_in_basis(L_big.basis, L_small.basis.a[i]);
    if (!y) throw ContainmentViolation("quotient_rank: L_small not in L_big");
    C.a[i] = *y;
  }
  QuotientInfo q;
  q.rank = L_big.rank() - L_small.rank();
  q.divisors = snf(std::move(C));
  return q;
}

std::vector<IntVec> quotient_basis_lifts(const IntLattice& L_big,
                                         const IntLattice& L_small) {
  int r = L_big.rank();
  IntMatrix C(L_small.rank(), r);
  for (int i = 0; i < L_small.rank(); ++i) {
    auto y = coords_in_basis(L_big.basis, L_small.basis.a[i]);
    if (!y) throw ContainmentViolation("quotient_basis_lifts: not contained");
    C.a[i] = *y;
  }
  IntMatrix Vinv;
  auto d = snf(std::move(C), nullptr, &Vinv);
  // New basis of L_big: rows of Vinv * basis.  Row i generates a cyclic
  // summand of order d[i] (infinite beyond the diagonal).
  IntMatrix newbasis = mat_mul(Vinv, L_big.basis);
  std::vector<IntVec> lifts;
  for (int i = 0; i < r; ++i) {
    bool torsion_one = i < (int)d.size() && d[i] == 1;
    if (torsion_one) continue;
    lifts.push_back(reduce_mod(L_small, newbasis.a[i]));
  }
  return lifts;
}

std::optional<IntVec> solve_left(const IntMatrix& A, const IntVec& c) {
  if ((int)c.size() != A.cols) throw DimensionMismatch("solve_left");
  HnfTransform t = hnf_transform(A);
  auto y = coords_in_basis(t.H, c);
  if (!y) return std::nullopt;
  return row_times_mat(*y, t.U);
}

}  // namespace bandq
