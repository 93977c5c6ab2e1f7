// Acceptance gate: eight end-to-end criteria, one verdict line each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bandq/cw.hpp"
#include "bandq/io.hpp"

using namespace bandq;

namespace {

int failures = 0;

void criterion(int num, const std::string& what, std::function<bool()> fn) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    err = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
              num, what.c_str(), (long long)ms, err.empty() ? "" : " -- ",
              err.c_str());
  if (!ok) ++failures;
}

struct Pipe {
  MulTable t;
  SupportLattice lat;
  IdempotentSystem idems;
  Quiver q;
  Presentation pres;

  explicit Pipe(MulTable band, bool force_generic = false)
      : t(std::move(band)),
        lat(support_lattice(t)),
        idems(lift_idempotents(t, lat, force_generic)),
        q(build_quiver(t, lat)),
        pres(compute_presentation(t, lat, idems, q)) {
    minimal_relations(t, lat, pres);
  }
};

std::vector<MulTable> connected_fixtures() {
  std::vector<MulTable> out;
  for (const char* spec :
       {"b5", "chain:3", "signs:1", "signs:2", "free_lrb1:2", "free_lrb1:3",
        "prod(chain:2,chain:2)", "prod(signs:1,signs:1)", "adjoin1(rect:2x2)",
        "adjoin1(rect:1x3)"})
    out.push_back(build_from_spec(spec));
  return out;
}

std::vector<MulTable> all_fixtures() {
  std::vector<MulTable> out = connected_fixtures();
  for (const char* spec :
       {"right_zero:2", "left_zero:2", "rect:2x2", "prod(left_zero:2,chain:2)"})
    out.push_back(build_from_spec(spec));
  return out;
}

// All bands on {0,..,n-1} up to isomorphism, by brute force over tables.
std::vector<MulTable> band_census(int n) {
  std::vector<MulTable> reps;
  std::vector<std::vector<int>> canon_keys;
  int cells = n * n;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  std::vector<int> perm(n);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    bool idem = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        m[a][b] = (int)(c % n);
        c /= n;
      }
    for (int a = 0; a < n && idem; ++a) idem = m[a][a] == a;
    if (!idem) continue;
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int x = 0; x < n; ++x)
          if (m[m[a][b]][x] != m[a][m[b][x]]) {
            assoc = false;
            break;
          }
    if (!assoc) continue;
    // canonical key: lexicographically least relabeling of the table
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      std::vector<int> key(cells);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          key[a * n + b] = perm[m[inv[a]][inv[b]]];
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    bool seen = false;
    for (const auto& k : canon_keys)
      if (k == best) {
        seen = true;
        break;
      }
    if (seen) continue;
    canon_keys.push_back(best);
    reps.push_back(from_table(n, m));
  }
  return reps;
}

bool check_battery_4to7(bool force_generic,
                        std::map<std::string, std::string>* fingerprint) {
  bool ok = true;
  auto fixtures = connected_fixtures();
  for (size_t fi = 0; fi < fixtures.size(); ++fi) {
    Pipe p(fixtures[fi], force_generic);
    std::string fp;
    // criterion 4: Tor1 triple agreement + torsion-freeness
    for (const auto& [pair, e] : tor1_table(p.t, p.lat, p.pres)) {
      if (e.arrows != e.lattice_rank || !e.torsion_free) ok = false;
      if (e.arrows != p.pres.quiver.arrow_count(pair.first, pair.second))
        ok = false;
      fp += std::to_string(e.arrows) + ",";
    }
    // criterion 5: main-theorem certificates
    if (!(p.pres.cert.surjective && p.pres.cert.i_in_j2 && p.pres.cert.jn_in_i &&
          p.pres.cert.rank_match && p.pres.ideal_closure_ok))
      ok = false;
    IsoCertificate iso = verify_isomorphism(p.t, p.lat, p.pres);
    if (!iso.pass) ok = false;
    for (const auto& d : iso.elementary_divisors) {
      if (d != 1) ok = false;
      fp += d.str() + ";";
    }
    fp += "|hered=" + std::to_string(hereditary_test(p.pres));
    fp += "|krank=" + std::to_string(p.pres.kernel_lattice.rank());
    // criterion 7 (partially): cw on the sign monoids within the battery
    if (validate(p.t).is_left_regular) {
      bool graded = false;
      if (two_cover_check(p.t, p.lat, &graded) &&
          quiver_is_hasse(p.q, p.lat)) {
        CwReport cw = verify_cw_theorem(p.t, p.lat, p.idems, p.q);
        if (!cw.kernel_equals_r) ok = false;
        fp += "|cwrank=" + std::to_string(cw.quotient_rank);
      }
    }
    if (fingerprint) (*fingerprint)["fixture" + std::to_string(fi)] = fp;
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "golden fixture: presentation of the 5-element band", [] {
    Pipe p(b5_example());
    if (p.q.num_vertices != 2) return false;
    if (p.q.arrows.size() != 2 || p.q.arrow_count(0, 1) != 1 ||
        p.q.arrow_count(1, 0) != 1)
      return false;
    auto psi = [&](int i) { return psi_path(p.t, p.lat, p.idems, p.pres.trunc, i).c; };
    if (psi(0) != IntVec{0, 1, 0, 0, 0}) return false;   // eps_bottom -> a
    if (psi(1) != IntVec{1, -1, 0, 0, 0}) return false;  // eps_top -> 1-a
    if (psi(2) != IntVec{0, -1, 0, 1, 0}) return false;  // alpha -> ab-a
    if (psi(3) != IntVec{0, -1, 0, 0, 1}) return false;  // beta -> ba-a
    if (p.pres.kernel_lattice.rank() != 1) return false;
    // unique minimal relation = the composite path alpha-after-beta
    if (p.pres.min_generators.size() != 1 ||
        p.pres.min_generators[0].gens.size() != 1)
      return false;
    const IntVec& g = p.pres.min_generators[0].gens[0];
    for (size_t i = 0; i < g.size(); ++i) {
      bool is_ab = p.pres.trunc_ext.path_name((int)i) == "αβ";
      if (is_ab && abs(g[i]) != 1) return false;
      if (!is_ab && g[i] != 0) return false;
    }
    // quotient of rank 5 with the five listed images a Z-basis
    IsoCertificate iso = verify_isomorphism(p.t, p.lat, p.pres);
    if (!iso.pass) return false;
    IntMatrix images(5, 5);
    images.a[0] = psi(0);
    images.a[1] = psi(1);
    images.a[2] = psi(2);
    images.a[3] = psi(3);
    images.a[4] = psi(4);
    return equal(hnf(images), hnf(identity_matrix(5)));
  });

  criterion(2, "unit iff connected on the n<=3 census plus fixtures", [] {
    std::vector<MulTable> cases;
    for (int n = 1; n <= 3; ++n)
      for (auto& t : band_census(n)) cases.push_back(std::move(t));
    for (auto& t : all_fixtures()) cases.push_back(std::move(t));
    if (cases.size() < 10) return false;
    for (const auto& t : cases) {
      SupportLattice lat = support_lattice(t);
      // find_identity itself throws TheoremViolation on disagreement;
      // re-check explicitly anyway
      bool connected = is_connected(t, lat);
      bool unit = find_identity(t, lat).has_value();
      if (connected != unit) return false;
    }
    return true;
  });

  criterion(3, "nilpotency index within the 2^(h+1)+1 bound", [] {
    for (const auto& t : all_fixtures()) {
      SupportLattice lat = support_lattice(t);
      IntLattice J = jradical(t, lat);
      if (nilpotency_index(t, lat, J) > brown_bound(lat)) return false;
    }
    MulTable t = b5_example();
    SupportLattice lat = support_lattice(t);
    return nilpotency_index(t, lat, jradical(t, lat)) == 3 &&
           brown_bound(lat) == 5;
  });

  criterion(4, "Tor1 triple agreement over the battery", [] {
    for (const auto& t : connected_fixtures()) {
      Pipe p(t);
      for (const auto& [pair, e] : tor1_table(p.t, p.lat, p.pres)) {
        if (e.arrows != e.lattice_rank || !e.torsion_free) return false;
        if (e.arrows != p.q.arrow_count(pair.first, pair.second)) return false;
      }
    }
    return true;
  });

  criterion(5, "main-theorem certificates over the battery", [] {
    for (const auto& t : connected_fixtures()) {
      Pipe p(t);
      if (!(p.pres.cert.surjective && p.pres.cert.i_in_j2 &&
            p.pres.cert.jn_in_i && p.pres.cert.rank_match))
        return false;
      if (!verify_isomorphism(p.t, p.lat, p.pres).pass) return false;
    }
    return true;
  });

  criterion(6, "hereditary exactly for the rooted-tree fixtures", [] {
    Pipe f2(free_lrb_with_identity(2));
    Pipe f3(free_lrb_with_identity(3));
    Pipe b5(b5_example());
    Pipe s2(sign_face_monoid(2));
    return hereditary_test(f2.pres) && f2.pres.kernel_lattice.rank() == 0 &&
           f2.q.is_acyclic() && hereditary_test(f3.pres) &&
           f3.pres.kernel_lattice.rank() == 0 && f3.q.is_acyclic() &&
           !hereditary_test(b5.pres) && !hereditary_test(s2.pres);
  });

  criterion(7, "CW theorem on signs(1..3) with ranks 3, 9, 27", [] {
    std::vector<int> want = {3, 9, 27};
    for (int n = 1; n <= 3; ++n) {
      MulTable t = sign_face_monoid(n);
      SupportLattice lat = support_lattice(t);
      IdempotentSystem idems = lift_idempotents(t, lat);
      Quiver q = build_quiver(t, lat);
      if (!quiver_is_hasse(q, lat)) return false;
      CwReport rep = verify_cw_theorem(t, lat, idems, q);
      if (!rep.two_cover_ok || !rep.kernel_equals_r) return false;
      if (!rep.sign_vector.has_value()) return false;
      if (rep.quotient_rank != want[n - 1]) return false;
    }
    return true;
  });

  criterion(8, "generic idempotent lifting reproduces criteria 4-7", [] {
    std::map<std::string, std::string> fast, generic;
    if (!check_battery_4to7(false, &fast)) return false;
    if (!check_battery_4to7(true, &generic)) return false;
    return fast == generic;
  });

  std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                                    : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
