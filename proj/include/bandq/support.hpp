#ifndef BANDQ_SUPPORT_HPP
#define BANDQ_SUPPORT_HPP

#include <string>
#include <vector>

#include "bandq/multable.hpp"

namespace bandq {

/// The support semilattice Lambda(B) of principal two-sided ideals, with
/// the support map sigma, Moebius function and per-support data.
/// Supports are canonically ordered by (rank, smallest contained element
/// index); all downstream determinism depends on this order.
struct SupportLattice {
  int m = 0;
  std::vector<std::vector<int>> meet;      // m x m
  std::vector<std::vector<char>> leq;      // leq[X][Y] iff X <= Y
  std::vector<int> rank;                   // longest chain strictly below
  std::vector<std::vector<long long>> mobius;  // mu(Y,X) for Y <= X, else 0
  std::vector<int> sigma;                  // length n, B -> supports
  std::vector<std::vector<int>> classes;   // per support, sorted elements
  std::vector<int> basepoint;              // f_X = least-index element

  bool lt(int X, int Y) const { return leq[X][Y] && X != Y; }
  int height() const;  // length of the longest chain in Lambda(B)
  std::string name(const MulTable& t, int X) const;
};

SupportLattice support_lattice(const MulTable& t);

enum class Side { R, L };

struct SimpleGraph {
  std::vector<int> vertices;                // band element indices
  std::vector<std::pair<int, int>> edges;   // indices into vertices
  std::vector<int> component;               // per vertex
  int num_components = 0;
};

/// Adds component labels from the edge list (union-find).
void label_components(SimpleGraph& g);

/// The global connectivity graph Gamma_R(B,X) or Gamma_L(B,X): vertices
/// sigma^-1(X), adjacency = common upper bound in the respective Green
/// preorder, the bound ranging over all of B.
SimpleGraph gamma_global(const MulTable& t, const SupportLattice& lat, int X,
                         Side side);

bool is_connected(const MulTable& t, const SupportLattice& lat);

/// Witness for a disconnected band: the first disconnected global graph.
struct DisconnectWitness {
  int X = -1;
  Side side = Side::R;
  SimpleGraph graph;
};
std::optional<DisconnectWitness> find_disconnect(const MulTable& t,
                                                 const SupportLattice& lat);

/// tau(b) = indicator vector of {Y : Y <= sigma(b)} over the supports.
std::vector<int> tau_vector(const SupportLattice& lat, int b);

std::string graph_dot(const MulTable& t, const SimpleGraph& g);

}  // namespace bandq

#endif
