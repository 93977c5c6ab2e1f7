#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"

#include "bandq/intlattice.hpp"

using namespace bandq;

namespace {

IntMatrix make(std::vector<std::vector<long long>> rows) {
  IntMatrix M((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M(i, j) = rows[i][j];
  return M;
}

}  // namespace

TEST_CASE("hnf of a permutation matrix is the identity basis") {
  IntLattice L = hnf(make({{0, 1}, {1, 0}}));
  CHECK(L.rank() == 2);
  CHECK(L.basis == identity_matrix(2));
}

TEST_CASE("hnf canonical form: pivots positive, entries above reduced") {
  IntLattice L = hnf(make({{4, 6, 1}, {2, 3, 5}}));
  for (int i = 0; i < L.rank(); ++i) {
    int p = 0;
    while (L.basis(i, p) == 0) ++p;
    CHECK(L.basis(i, p) > 0);
    for (int k = 0; k < i; ++k) {
      CHECK(L.basis(k, p) >= 0);
      CHECK(L.basis(k, p) < L.basis(i, p));
    }
  }
}

TEST_CASE("hnf is invariant under row remixing") {
  std::mt19937 rng(12345);
  IntMatrix M = make({{3, 1, 4, 1}, {5, 9, 2, 6}, {8, 2, 8, 1}});
  IntLattice L = hnf(M);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix N = M;
    for (int step = 0; step < 12; ++step) {
      int i = (int)(rng() % N.rows), j = (int)(rng() % N.rows);
      if (i == j) continue;
      long long q = (long long)(rng() % 7) - 3;
      for (int c = 0; c < N.cols; ++c) N(i, c) += q * N(j, c);
    }
    CHECK(hnf(N) == L);
  }
}

TEST_CASE("kernel of [[2,-2]] is spanned by (1,1)") {
  // left kernel of the column (2,-2): v0*2 + v1*(-2) = 0 -> (1,1)
  IntLattice K = kernel(make({{2}, {-2}}));
  CHECK(K.rank() == 1);
  CHECK(K.basis == make({{1, 1}}));
}

TEST_CASE("kernel is saturated") {
  // 2*v0 + 4*v1 = 0 has primitive solution (2,-1), not (4,-2).
  IntLattice K = kernel(make({{2}, {4}}));
  CHECK(K.rank() == 1);
  IntVec v = {2, -1};
  CHECK(member(K, v));
}

TEST_CASE("kernel rows really annihilate") {
  std::mt19937 rng(999);
  IntMatrix M(5, 3);
  for (auto& row : M.a)
    for (auto& x : row) x = (long long)(rng() % 9) - 4;
  IntLattice K = kernel(M);
  CHECK(K.rank() >= 2);  // 5 rows into Z^3
  for (int i = 0; i < K.rank(); ++i) {
    IntVec prod = row_times_mat(K.basis.a[i], M);
    for (const auto& x : prod) CHECK(x == 0);
  }
}

TEST_CASE("member and subset") {
  IntLattice L = hnf(make({{1, 0, 0}, {0, 1, 0}}));
  IntVec in = {1, 1, 0}, out = {0, 0, 1};
  CHECK(member(L, in));
  CHECK_FALSE(member(L, out));
  CHECK(subset(hnf(make({{2, 3, 0}})), L));
  CHECK_FALSE(subset(L, hnf(make({{2, 3, 0}}))));
}

TEST_CASE("lattice_sum and reduce_mod") {
  IntLattice A = hnf(make({{2, 0}}));
  IntLattice B = hnf(make({{0, 3}}));
  IntLattice S = lattice_sum(A, B);
  CHECK(S.rank() == 2);
  IntVec v = {5, 7};
  IntVec r = reduce_mod(S, v);
  CHECK(r == IntVec{1, 1});
}

TEST_CASE("quotient_rank: Z^2 / span{(2,0)}") {
  IntLattice big = hnf(identity_matrix(2));
  IntLattice small = hnf(make({{2, 0}}));
  QuotientInfo q = quotient_rank(big, small);
  CHECK(q.rank == 1);
  REQUIRE(q.divisors.size() == 1);
  CHECK(q.divisors[0] == 2);
  CHECK_FALSE(q.torsion_free());
}

TEST_CASE("quotient_basis_lifts generate the quotient") {
  IntLattice big = hnf(identity_matrix(3));
  IntLattice small = hnf(make({{2, 0, 0}, {0, 1, 0}}));
  auto lifts = quotient_basis_lifts(big, small);
  // quotient is Z/2 x Z: one torsion generator + one free generator
  REQUIRE(lifts.size() == 2);
  IntMatrix gen((int)lifts.size() + small.rank(), 3);
  for (size_t i = 0; i < lifts.size(); ++i) gen.a[i] = lifts[i];
  for (int i = 0; i < small.rank(); ++i)
    gen.a[lifts.size() + i] = small.basis.a[i];
  CHECK(equal(hnf(gen), big));
}

TEST_CASE("snf examples") {
  CHECK(snf(make({{2, 4}, {6, 8}})) == std::vector<Int>{2, 4});
  CHECK(snf(make({{1, 0}, {0, 1}})) == std::vector<Int>{1, 1});
  auto d = snf(make({{2, 0, 0}, {0, 3, 0}}));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);  // divisibility chain 1 | 6
  CHECK(d[1] == 6);
}

TEST_CASE("snf transforms satisfy U*M*V = D") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix M(4, 3);
    for (auto& row : M.a)
      for (auto& x : row) x = (long long)(rng() % 11) - 5;
    IntMatrix U, Vinv;
    auto d = snf(M, &U, &Vinv);
    // D = U*M*V, i.e. U*M = D*Vinv
    IntMatrix UM = mat_mul(U, M);
    IntMatrix D(4, 3);
    for (size_t i = 0; i < d.size(); ++i) D((int)i, (int)i) = d[i];
    CHECK(UM == mat_mul(D, Vinv));
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] == 0)
        CHECK(d[i + 1] == 0);
      else
        CHECK(d[i + 1] % d[i] == 0);
    }
  }
}

TEST_CASE("solve_left finds a solution when one exists") {
  IntMatrix A = make({{2, 1}, {0, 3}});
  IntVec c = {4, 5};
  auto x = solve_left(A, c);
  REQUIRE(x.has_value());
  CHECK(row_times_mat(*x, A) == c);
  IntVec c2 = {1, 0};
  IntMatrix A2 = make({{2, 0}, {0, 2}});
  CHECK_FALSE(solve_left(A2, c2).has_value());
}

TEST_CASE("coords_in_basis") {
  IntLattice L = hnf(make({{2, 1, 0}, {0, 3, 1}}));
  IntVec v = {4, 5, 1};  // 2*row0 + 1*row1
  auto c = coords_in_basis(L.basis, v);
  REQUIRE(c.has_value());
  CHECK(*c == IntVec{2, 1});
  IntVec w = {1, 0, 0};
  CHECK_FALSE(coords_in_basis(L.basis, w).has_value());
}
