#include "bandq/pathalg.hpp"

#include <algorithm>

namespace bandq {

std::vector<Path> enumerate_paths(const Quiver& q, int L) {
  if (L < 1) throw RangeError("enumerate_paths: need L >= 1");
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (int v = 0; v < q.num_vertices; ++v) {
    Path p;
    p.src = p.dst = v;
    frontier.push_back(p);
  }
  for (int len = 0; len < L && !frontier.empty(); ++len) {
    std::sort(frontier.begin(), frontier.end());
    out.insert(out.end(), frontier.begin(), frontier.end());
    if ((long long)out.size() > kPathGuard)
      throw Explosion("path enumeration exceeded guard");
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int a = 0; a < (int)q.arrows.size(); ++a)
        if (q.arrows[a].src == p.dst) {
          Path e = p;
          e.arrows.push_back(a);
          e.dst = q.arrows[a].dst;
          next.push_back(e);
        }
    frontier = std::move(next);
  }
  return out;
}

TruncatedPathAlgebra TruncatedPathAlgebra::build(const Quiver& q, int L) {
  TruncatedPathAlgebra A;
  A.quiver = q;
  A.cutoff = L;
  A.basis = enumerate_paths(q, L);
  for (int i = 0; i < (int)A.basis.size(); ++i) A.index[A.basis[i]] = i;
  return A;
}

int TruncatedPathAlgebra::mul(int i, int j) const {
  const Path& p = basis[i];  // applied second
  const Path& q = basis[j];  // applied first
  if (q.dst != p.src) return -1;
  if (p.length() + q.length() >= cutoff) return -1;
  Path r;
  r.src = q.src;
  r.dst = p.dst;
  r.arrows = q.arrows;
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  auto it = index.find(r);
  if (it == index.end()) return -1;
  return it->second;
}

IntVec TruncatedPathAlgebra::multiply(const IntVec& u, const IntVec& v) const {
  if ((int)u.size() != rank() || (int)v.size() != rank())
    throw DimensionMismatch("TruncatedPathAlgebra::multiply");
  IntVec r(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (v[j] == 0) continue;
      int k = mul(i, j);
      if (k >= 0) r[k] += u[i] * v[j];
    }
  }
  return r;
}

std::string TruncatedPathAlgebra::path_name(int i) const {
  const Path& p = basis[i];
  if (p.length() == 0) return "ε" + std::to_string(p.src);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
    s += quiver.arrows[*it].name;
  return s;
}

}  // namespace bandq
