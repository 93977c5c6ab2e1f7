#include "bandq/presentation.hpp"

#include <algorithm>

namespace bandq {

AlgElem psi_arrow(const MulTable& t, const SupportLattice& lat,
                  const IdempotentSystem& idems, const Arrow& a) {
  int f_dst = lat.basepoint[a.dst];
  int f_src = lat.basepoint[a.src];
  AlgElem diff = sub(AlgElem::basis(t.n, a.label),
                     AlgElem::basis(t.n, t.mul(f_dst, f_src)));
  return multiply(t, idems.idems[a.dst],
                  multiply(t, diff, idems.idems[a.src]));
}

namespace {

AlgElem psi_arrow_seq(const MulTable& t, const SupportLattice& lat,
                      const IdempotentSystem& idems, const Quiver& q,
                      const std::vector<int>& arrows, int lazy_vertex) {
  if (arrows.empty()) return idems.idems[lazy_vertex];
  AlgElem r = psi_arrow(t, lat, idems, q.arrows[arrows[0]]);
  for (size_t i = 1; i < arrows.size(); ++i)
    r = multiply(t, psi_arrow(t, lat, idems, q.arrows[arrows[i]]), r);
  return r;
}

}  // namespace

AlgElem psi_path(const MulTable& t, const SupportLattice& lat,
                 const IdempotentSystem& idems,
                 const TruncatedPathAlgebra& trunc, int path_index) {
  const Path& p = trunc.basis[path_index];
  return psi_arrow_seq(t, lat, idems, trunc.quiver, p.arrows, p.src);
}

namespace {

IntMatrix psi_matrix_of(const MulTable& t, const SupportLattice& lat,
                        const IdempotentSystem& idems,
                        const TruncatedPathAlgebra& trunc) {
  IntMatrix M(trunc.rank(), t.n);
  for (int i = 0; i < trunc.rank(); ++i)
    M.a[i] = psi_path(t, lat, idems, trunc, i).c;
  return M;
}

bool image_is_full(const IntMatrix& psi, int n) {
  IntLattice img = hnf(psi);
  return img.rank() == n && img.basis == identity_matrix(n);
}

}  // namespace

Presentation compute_presentation(const MulTable& t, const SupportLattice& lat,
                                  const IdempotentSystem& idems,
                                  const Quiver& q,
                                  std::optional<int> truncation_override) {
  Presentation pres;
  pres.quiver = q;
  pres.idems = idems;
  pres.cutoff = truncation_override.value_or(idems.nilpotency);
  if (pres.cutoff < 1) throw RangeError("truncation cutoff must be >= 1");
  pres.trunc = TruncatedPathAlgebra::build(q, pres.cutoff);
  pres.psi_matrix = psi_matrix_of(t, lat, idems, pres.trunc);
  pres.kernel_lattice = kernel(pres.psi_matrix);

  pres.cert.surjective = image_is_full(pres.psi_matrix, t.n);
  pres.cert.i_in_j2 = true;
  for (int i = 0; i < pres.kernel_lattice.rank(); ++i)
    for (int j = 0; j < pres.trunc.rank(); ++j)
      if (pres.trunc.basis[j].length() <= 1 &&
          pres.kernel_lattice.basis(i, j) != 0)
        pres.cert.i_in_j2 = false;
  // psi kills every path of length N (so J^N lands in the kernel ideal).
  pres.cert.jn_in_i = true;
  {
    int N = idems.nilpotency;
    auto longer = enumerate_paths(q, N + 1);
    for (const auto& p : longer)
      if (p.length() == N &&
          !psi_arrow_seq(t, lat, idems, q, p.arrows, p.src).is_zero())
        pres.cert.jn_in_i = false;
  }
  pres.cert.rank_match =
      pres.trunc.rank() - pres.kernel_lattice.rank() == t.n;
  if (!pres.cert.surjective || !pres.cert.i_in_j2 || !pres.cert.jn_in_i ||
      !pres.cert.rank_match)
    throw CertificateFailure("admissibility certificate failed");
  return pres;
}

namespace {

// Span of {g*a, a*g : g basis of I, a arrow} inside a truncation.
IntLattice ij_plus_ji(const TruncatedPathAlgebra& trunc, const IntLattice& I) {
  int P = trunc.rank();
  std::vector<IntVec> rows;
  for (int i = 0; i < I.rank(); ++i) {
    const IntVec& g = I.basis.a[i];
    for (int a = 0; a < (int)trunc.quiver.arrows.size(); ++a) {
      Path ap;
      ap.arrows = {a};
      ap.src = trunc.quiver.arrows[a].src;
      ap.dst = trunc.quiver.arrows[a].dst;
      int ai = trunc.index.at(ap);
      IntVec av(P, 0);
      av[ai] = 1;
      rows.push_back(trunc.multiply(g, av));
      rows.push_back(trunc.multiply(av, g));
    }
  }
  IntMatrix M((int)rows.size(), P);
  for (size_t i = 0; i < rows.size(); ++i) M.a[i] = rows[i];
  return hnf(M);
}

IntVec pair_project(const TruncatedPathAlgebra& trunc, const IntVec& v,
                    int dst, int src) {
  IntVec r(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i)
    if (trunc.basis[i].dst == dst && trunc.basis[i].src == src) r[i] = v[i];
  return r;
}

IntLattice project_lattice(const TruncatedPathAlgebra& trunc,
                           const IntLattice& L, int dst, int src) {
  IntMatrix M(L.rank(), L.ambient_dim);
  for (int i = 0; i < L.rank(); ++i)
    M.a[i] = pair_project(trunc, L.basis.a[i], dst, src);
  return hnf(M);
}

}  // namespace

void minimal_relations(const MulTable& t, const SupportLattice& lat,
                       Presentation& pres) {
  int L = pres.cutoff;
  pres.trunc_ext = TruncatedPathAlgebra::build(pres.quiver, L + 1);
  IntMatrix psi2 = psi_matrix_of(t, lat, pres.idems, pres.trunc_ext);
  pres.kernel_ext = kernel(psi2);
  IntLattice T = ij_plus_ji(pres.trunc_ext, pres.kernel_ext);

  pres.min_generators.clear();
  std::vector<IntVec> all_lifts;
  for (int w = 0; w < lat.m; ++w)
    for (int v = 0; v < lat.m; ++v) {
      IntLattice I_wv = project_lattice(pres.trunc_ext, pres.kernel_ext, w, v);
      IntLattice T_wv = project_lattice(pres.trunc_ext, T, w, v);
      auto lifts = quotient_basis_lifts(I_wv, T_wv);
      if (lifts.empty()) continue;
      Presentation::RelGroup g;
      g.src = v;
      g.dst = w;
      g.gens = lifts;
      pres.min_generators.push_back(std::move(g));
      for (const auto& l : lifts) all_lifts.push_back(l);
    }

  // Certify that the lifted generators generate the whole kernel ideal.
  int P = pres.trunc_ext.rank();
  IntMatrix G((int)all_lifts.size(), P);
  for (size_t i = 0; i < all_lifts.size(); ++i) G.a[i] = all_lifts[i];
  IntLattice closure = ideal_closure(pres.trunc_ext, hnf(G));
  pres.ideal_closure_ok = equal(closure, pres.kernel_ext);
  pres.relations_computed = true;
}

IntLattice ideal_closure(const TruncatedPathAlgebra& trunc,
                         const IntLattice& seed) {
  int P = trunc.rank();
  // Basis indices of all paths of length <= 1 (lazy paths act as the
  // Peirce projections, arrows grow the ideal).
  std::vector<int> short_paths;
  for (int i = 0; i < P; ++i)
    if (trunc.basis[i].length() <= 1) short_paths.push_back(i);
  IntLattice closure = seed;
  for (;;) {
    std::vector<IntVec> rows;
    for (int i = 0; i < closure.rank(); ++i) {
      const IntVec& g = closure.basis.a[i];
      for (int s : short_paths) {
        IntVec sv(P, 0);
        sv[s] = 1;
        rows.push_back(trunc.multiply(g, sv));
        rows.push_back(trunc.multiply(sv, g));
      }
    }
    IntMatrix M((int)rows.size(), P);
    for (size_t i = 0; i < rows.size(); ++i) M.a[i] = rows[i];
    IntLattice bigger = lattice_sum(closure, hnf(M));
    if (equal(bigger, closure)) return closure;
    closure = bigger;
  }
}

IsoCertificate verify_isomorphism(const MulTable& t,
                                  const SupportLattice& lat,
                                  const Presentation& pres) {
  (void)lat;
  IsoCertificate c;
  // Quotient of the truncation by I_L: free of rank |B|.
  IntLattice full;
  full.ambient_dim = pres.trunc.rank();
  full.basis = identity_matrix(pres.trunc.rank());
  QuotientInfo q = quotient_rank(full, pres.kernel_lattice);
  c.elementary_divisors = q.divisors;
  c.quotient_free_of_rank_n = q.rank == t.n && q.torsion_free();
  // Multiplicativity on every pair of basis paths.
  c.multiplicative = true;
  int P = pres.trunc.rank();
  for (int i = 0; i < P && c.multiplicative; ++i)
    for (int j = 0; j < P; ++j) {
      AlgElem lhs = multiply(t, AlgElem{pres.psi_matrix.a[i]},
                             AlgElem{pres.psi_matrix.a[j]});
      int k = pres.trunc.mul(i, j);
      AlgElem rhs = k >= 0 ? AlgElem{pres.psi_matrix.a[k]} : AlgElem::zero(t.n);
      if (!(lhs == rhs)) {
        c.multiplicative = false;
        break;
      }
    }
  c.pass = c.quotient_free_of_rank_n && c.multiplicative &&
           pres.cert.surjective && pres.cert.rank_match;
  if (!c.pass) throw CertificateFailure("isomorphism certificate failed");
  return c;
}

bool hereditary_test(const Presentation& pres) {
  bool acyclic = pres.quiver.is_acyclic();
  bool result = false;
  if (acyclic) {
    long long total = pres.quiver.total_path_count();
    result = total == (long long)pres.psi_matrix.cols;
  }
  bool kernel_zero = pres.kernel_lattice.rank() == 0;
  if (result != (acyclic && kernel_zero))
    throw CertificateFailure(
        "hereditary path count disagrees with kernel rank");
  return result;
}

IntLattice jsquared(const MulTable& t, const IntLattice& J) {
  IntMatrix M(J.rank() * J.rank(), t.n);
  int row = 0;
  for (int i = 0; i < J.rank(); ++i)
    for (int j = 0; j < J.rank(); ++j)
      M.a[row++] =
          multiply(t, AlgElem{J.basis.a[i]}, AlgElem{J.basis.a[j]}).c;
  return hnf(M);
}

IntLattice peirce_j_plus_j2(const MulTable& t, const IdempotentSystem& idems,
                            const IntLattice& J2, int Y, int X) {
  IntMatrix M(idems.jbasis.rank(), t.n);
  for (int i = 0; i < idems.jbasis.rank(); ++i)
    M.a[i] = multiply(t, idems.idems[Y],
                      multiply(t, AlgElem{idems.jbasis.basis.a[i]},
                               idems.idems[X]))
                 .c;
  IntLattice E = hnf(M);
  return lattice_sum(E, J2);
}

std::map<std::pair<int, int>, Tor1Entry> tor1_table(
    const MulTable& t, const SupportLattice& lat, const Presentation& pres) {
  std::map<std::pair<int, int>, Tor1Entry> table;
  IntLattice J2 = jsquared(t, pres.idems.jbasis);
  for (int X = 0; X < lat.m; ++X)
    for (int Y = 0; Y < lat.m; ++Y) {
      if (X == Y) continue;
      Tor1Entry e;
      e.arrows = pres.quiver.arrow_count(X, Y);
      IntLattice big = peirce_j_plus_j2(t, pres.idems, J2, Y, X);
      QuotientInfo q = quotient_rank(big, J2);
      e.lattice_rank = q.rank;
      e.torsion_free = q.torsion_free();
      table[{X, Y}] = e;
    }
  return table;
}

std::string relation_report(const MulTable& t, const Presentation& pres) {
  (void)t;
  std::string s;
  for (const auto& g : pres.min_generators)
    for (const auto& vec : g.gens) {
      std::string rel;
      for (size_t i = 0; i < vec.size(); ++i) {
        if (vec[i] == 0) continue;
        Int v = vec[i];
        if (rel.empty()) {
          if (v < 0) rel += "-";
        } else {
          rel += v < 0 ? " - " : " + ";
        }
        Int av = abs(v);
        if (av != 1) rel += av.str() + "*";
        rel += pres.trunc_ext.path_name((int)i);
      }
      if (rel.empty()) rel = "0";
      s += rel + " = 0\n";
    }
  return s;
}

}  // namespace bandq
