#include "bandq/zalgebra.hpp"

#include <algorithm>

namespace bandq {

AlgElem add(const AlgElem& u, const AlgElem& v) {
  if (u.c.size() != v.c.size()) throw BandMismatch("add: size mismatch");
  AlgElem r = u;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += v.c[i];
  return r;
}

AlgElem sub(const AlgElem& u, const AlgElem& v) {
  if (u.c.size() != v.c.size()) throw BandMismatch("sub: size mismatch");
  AlgElem r = u;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= v.c[i];
  return r;
}

AlgElem scale(const Int& k, const AlgElem& u) {
  AlgElem r = u;
  for (auto& x : r.c) x *= k;
  return r;
}

AlgElem multiply(const MulTable& t, const AlgElem& u, const AlgElem& v) {
  if ((int)u.c.size() != t.n || (int)v.c.size() != t.n)
    throw BandMismatch("multiply: element size does not match band");
  AlgElem r = AlgElem::zero(t.n);
  for (int a = 0; a < t.n; ++a) {
    if (u.c[a] == 0) continue;
    for (int b = 0; b < t.n; ++b) {
      if (v.c[b] == 0) continue;
      r.c[t.mul(a, b)] += u.c[a] * v.c[b];
    }
  }
  return r;
}

IntVec tau_of(const SupportLattice& lat, const AlgElem& u) {
  IntVec v(lat.m, 0);
  for (int b = 0; b < (int)u.c.size(); ++b) {
    if (u.c[b] == 0) continue;
    for (int Y = 0; Y < lat.m; ++Y)
      if (lat.leq[Y][lat.sigma[b]]) v[Y] += u.c[b];
  }
  return v;
}

IntLattice jradical(const MulTable& t, const SupportLattice& lat) {
  IntMatrix M(t.n, t.n);
  for (int b = 0; b < t.n; ++b) {
    M(b, b) += 1;
    M(b, lat.basepoint[lat.sigma[b]]) -= 1;
  }
  return hnf(M);
}

long long brown_bound(const SupportLattice& lat) {
  return (1LL << (lat.height() + 1)) + 1;
}

int nilpotency_index(const MulTable& t, const SupportLattice& lat,
                     const IntLattice& J) {
  long long bound = brown_bound(lat);
  IntLattice cur = J;
  int k = 1;
  while (cur.rank() > 0) {
    if (k > bound)
      throw BoundViolated("nilpotency index exceeds the 2^(h+1)+1 bound");
    IntMatrix prods(cur.rank() * J.rank(), t.n);
    int row = 0;
    for (int i = 0; i < cur.rank(); ++i)
      for (int j = 0; j < J.rank(); ++j) {
        AlgElem p = multiply(t, AlgElem{cur.basis.a[i]}, AlgElem{J.basis.a[j]});
        prods.a[row++] = p.c;
      }
    cur = hnf(prods);
    ++k;
  }
  return k;
}

std::optional<AlgElem> find_identity(const MulTable& t,
                                     const SupportLattice& lat) {
  // e*b = b and b*e = b for every basis element b, solved exactly over Z.
  IntMatrix A(t.n, 2 * t.n * t.n);
  IntVec c(2 * t.n * t.n, 0);
  for (int b = 0; b < t.n; ++b) {
    int off_l = b * t.n;                  // block for e*b = b
    int off_r = t.n * t.n + b * t.n;      // block for b*e = b
    for (int i = 0; i < t.n; ++i) {
      A(i, off_l + t.mul(i, b)) += 1;
      A(i, off_r + t.mul(b, i)) += 1;
    }
    c[off_l + b] = 1;
    c[off_r + b] = 1;
  }
  auto x = solve_left(A, c);
  bool connected = is_connected(t, lat);
  if (x.has_value() != connected)
    throw TheoremViolation(
        "unit existence disagrees with connectivity of the band");
  if (!x) return std::nullopt;
  return AlgElem{*x};
}

namespace {

bool is_idempotent(const MulTable& t, const AlgElem& e) {
  return multiply(t, e, e) == e;
}

AlgElem refine_idempotent(const MulTable& t, AlgElem e) {
  // e <- 3e^2 - 2e^3; the defect e^2 - e squares each round, so this
  // terminates once the defect falls into a zero power of J.
  for (int round = 0; round < 64; ++round) {
    if (is_idempotent(t, e)) return e;
    AlgElem e2 = multiply(t, e, e);
    AlgElem e3 = multiply(t, e2, e);
    e = sub(scale(3, e2), scale(2, e3));
  }
  throw LiftFailure("idempotent refinement did not converge");
}

void check_system(const MulTable& t, const SupportLattice& lat,
                  const std::vector<AlgElem>& idems, const AlgElem& one) {
  AlgElem s = AlgElem::zero(t.n);
  for (int X = 0; X < lat.m; ++X) {
    const AlgElem& e = idems[X];
    if (!is_idempotent(t, e)) throw LiftFailure("e_X not idempotent");
    IntVec tau = tau_of(lat, e);
    for (int Y = 0; Y < lat.m; ++Y)
      if (tau[Y] != (Y == X ? 1 : 0))
        throw LiftFailure("tau(e_X) != delta_X");
    for (int Y = 0; Y < X; ++Y) {
      if (!multiply(t, e, idems[Y]).is_zero() ||
          !multiply(t, idems[Y], e).is_zero())
        throw LiftFailure("idempotents not orthogonal");
    }
    s = add(s, e);
  }
  if (!(s == one)) throw LiftFailure("idempotents do not sum to 1");
}

std::vector<AlgElem> lift_generic(const MulTable& t, const SupportLattice& lat,
                                  const AlgElem& one) {
  std::vector<AlgElem> idems(lat.m, AlgElem::zero(t.n));
  AlgElem s = AlgElem::zero(t.n);
  for (int X = 0; X < lat.m; ++X) {
    AlgElem e = AlgElem::zero(t.n);
    if (X == lat.m - 1) {
      e = sub(one, s);
      if (!is_idempotent(t, e))
        throw LiftFailure("final complement not idempotent");
    } else {
      // Moebius seed: tau(seed) = delta_X exactly, no division needed.
      for (int Y = 0; Y < lat.m; ++Y)
        if (lat.leq[Y][X])
          e.c[lat.basepoint[Y]] += Int(lat.mobius[Y][X]);
      e = refine_idempotent(t, e);
      AlgElem fence = sub(one, s);
      e = multiply(t, fence, multiply(t, e, fence));
      e = refine_idempotent(t, e);
    }
    idems[X] = e;
    s = add(s, e);
  }
  return idems;
}

std::vector<AlgElem> lift_lrb(const MulTable& t, const SupportLattice& lat) {
  // Bottom-up recursion e_X = f_X - sum_{Y<X} f_X * e_Y: products move
  // down the support lattice (sigma(ab) = sigma(a) ^ sigma(b)), so the
  // correction terms live strictly below X.
  std::vector<AlgElem> idems(lat.m, AlgElem::zero(t.n));
  for (int X = 0; X < lat.m; ++X) {
    // canonical support order is sorted by rank, so all Y < X are done
    AlgElem fX = AlgElem::basis(t.n, lat.basepoint[X]);
    AlgElem e = fX;
    for (int Y = 0; Y < lat.m; ++Y)
      if (lat.lt(Y, X)) e = sub(e, multiply(t, fX, idems[Y]));
    idems[X] = e;
  }
  return idems;
}

}  // namespace

IdempotentSystem lift_idempotents(const MulTable& t, const SupportLattice& lat,
                                  bool force_generic) {
  auto one = find_identity(t, lat);
  if (!one) throw NotConnected("idempotent lifting needs a connected band");
  IdempotentSystem sys;
  sys.basepoints = lat.basepoint;
  sys.one = *one;
  sys.jbasis = jradical(t, lat);
  sys.nilpotency = nilpotency_index(t, lat, sys.jbasis);

  bool lrb = validate(t).is_left_regular;
  if (lrb && !force_generic) {
    try {
      sys.idems = lift_lrb(t, lat);
      check_system(t, lat, sys.idems, sys.one);
      sys.used_lrb_fast_path = true;
      return sys;
    } catch (const LiftFailure&) {
      // fall back to the generic path
    }
  }
  sys.idems = lift_generic(t, lat, sys.one);
  check_system(t, lat, sys.idems, sys.one);
  return sys;
}

std::string alg_to_string(const MulTable& t, const AlgElem& u) {
  std::string s;
  for (int b = 0; b < (int)u.c.size(); ++b) {
    if (u.c[b] == 0) continue;
    Int v = u.c[b];
    if (s.empty()) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    Int av = abs(v);
    if (av != 1) s += av.str() + "*";
    s += t.name(b);
  }
  return s.empty() ? "0" : s;
}

}  // namespace bandq
