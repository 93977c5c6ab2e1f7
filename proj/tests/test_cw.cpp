#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bandq/cw.hpp"

using namespace bandq;

namespace {

CwReport run_cw(const MulTable& t) {
  SupportLattice lat = support_lattice(t);
  IdempotentSystem idems = lift_idempotents(t, lat);
  Quiver q = build_quiver(t, lat);
  return verify_cw_theorem(t, lat, idems, q);
}

}  // namespace

TEST_CASE("covers_R requires a left regular band") {
  CHECK_THROWS_AS(covers_R(b5_example()), NotLeftRegular);
}

TEST_CASE("two-cover check on the sign-vector monoids") {
  for (int n : {1, 2, 3}) {
    MulTable t = sign_face_monoid(n);
    SupportLattice lat = support_lattice(t);
    bool graded = false;
    CHECK(two_cover_check(t, lat, &graded));
    CHECK(graded);
  }
}

TEST_CASE("free lrb fails the two-cover check") {
  // the identity covers exactly one element of support {a}, namely a
  MulTable t = free_lrb_with_identity(2);
  SupportLattice lat = support_lattice(t);
  CHECK_FALSE(two_cover_check(t, lat));
}

TEST_CASE("quiver_is_hasse") {
  MulTable s2 = sign_face_monoid(2);
  SupportLattice l2 = support_lattice(s2);
  CHECK(quiver_is_hasse(build_quiver(s2, l2), l2));  // 4 arrows = 4 edges

  MulTable t = b5_example();
  SupportLattice lat = support_lattice(t);
  CHECK_FALSE(quiver_is_hasse(build_quiver(t, lat), lat));  // downward arrow

  MulTable c = chain_semilattice(3);
  SupportLattice lc = support_lattice(c);
  CHECK_FALSE(quiver_is_hasse(build_quiver(c, lc), lc));  // no arrows at all
}

TEST_CASE("cw theorem on signs(1): no 2-paths, zero kernel") {
  CwReport rep = run_cw(sign_face_monoid(1));
  CHECK(rep.two_cover_ok);
  CHECK(rep.quiver_is_hasse);
  CHECK(rep.kernel_equals_r);
  REQUIRE(rep.sign_vector.has_value());
  CHECK(rep.quotient_rank == 3);
}

TEST_CASE("cw theorem on signs(2)") {
  CwReport rep = run_cw(sign_face_monoid(2));
  CHECK(rep.two_cover_ok);
  CHECK(rep.quiver_is_hasse);
  CHECK(rep.kernel_equals_r);
  REQUIRE(rep.sign_vector.has_value());
  CHECK((*rep.sign_vector)[0] == 1);  // first arrow pinned
  CHECK(rep.quotient_rank == 9);
}

TEST_CASE("per-arrow psi hits the two covered elements") {
  // psi(arrow X -> Y) = +-e_Y (x - x') e_X with x, x' the two support-X
  // elements covered by f_Y, and f_Y f_X among them
  MulTable t = sign_face_monoid(2);
  SupportLattice lat = support_lattice(t);
  IdempotentSystem idems = lift_idempotents(t, lat);
  Quiver q = build_quiver(t, lat);
  auto bcov = covers_R(t);
  for (const auto& a : q.arrows) {
    int fY = lat.basepoint[a.dst];
    std::vector<int> covered;
    for (auto [x, b] : bcov)
      if (b == fY && lat.sigma[x] == a.src) covered.push_back(x);
    REQUIRE(covered.size() == 2);
    int fYfX = t.mul(fY, lat.basepoint[a.src]);
    CHECK((fYfX == covered[0] || fYfX == covered[1]));
  }
}
