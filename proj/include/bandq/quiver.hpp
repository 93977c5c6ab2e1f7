#ifndef BANDQ_QUIVER_HPP
#define BANDQ_QUIVER_HPP

#include <string>
#include <vector>

#include "bandq/multable.hpp"
#include "bandq/support.hpp"

namespace bandq {

enum class ArrowKind { RisingR, FallingL };

/// One of the local graphs Gamma_R(Y,X) (X < Y) or Gamma_L(X,Y) (X > Y),
/// with the per-component representatives in f_Y B f_X.
struct LocalGraph {
  ArrowKind kind;
  int X = -1;  // lower support
  int Y = -1;  // upper support
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices
  std::vector<int> component;
  int num_components = 0;
  std::vector<int> reps;  // one band element per component, in f_Y B f_X
  int basepoint_rep = -1; // f_Y * f_X
};

/// Gamma_R(Y,X) for X < Y: vertices L_X = sigma^-1(X) n B*f_X, an edge
/// {a, ba} for b in B_{>=Y} with ba != a, and an edge {a,c} when some b
/// with sigma(b) not >= Y is a common <=_R upper bound.
LocalGraph local_graph_R(const MulTable& t, const SupportLattice& lat, int X,
                         int Y);

/// Gamma_L(X,Y) for X > Y, the dual: vertices sigma^-1(Y) n f_Y*B, edges
/// {a, ab} for b in B_{>=X}, and common <=_L upper bounds below X.
LocalGraph local_graph_L(const MulTable& t, const SupportLattice& lat, int X,
                         int Y);

struct Arrow {
  int src = -1;   // source support
  int dst = -1;   // target support
  int label = -1; // band element (a non-basepoint component representative)
  ArrowKind kind;
  std::string name;  // "α", "β", ...
};

struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;

  int arrow_count(int src, int dst) const;
  bool is_acyclic() const;
  /// Total number of directed paths including the lazy ones; only valid
  /// (finite) when acyclic.
  long long total_path_count() const;
};

/// Assembles Q(B).  Arrows are enumerated over ordered support pairs in
/// (dst, src) lexicographic order, labels in component-representative
/// order; deterministic given the canonical support order.
Quiver build_quiver(const MulTable& t, const SupportLattice& lat);

/// For a left regular band and X < Y: does the shortcut graph on
/// f_Y B f_X n sigma^-1(X), with adjacency via a common upper bound in
/// B^{<_R f_Y}, have the same component count as Gamma_R(Y,X)?
bool lrb_shortcut_check(const MulTable& t, const SupportLattice& lat, int X,
                        int Y);

std::string quiver_dot(const MulTable& t, const SupportLattice& lat,
                       const Quiver& q);

}  // namespace bandq

#endif
