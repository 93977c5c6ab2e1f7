#include "bandq/support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace bandq {

int SupportLattice::height() const {
  int h = 0;
  for (int r : rank) h = std::max(h, r);
  return h;
}

std::string SupportLattice::name(const MulTable& t, int X) const {
  // Named after the basepoint's support class; bottom and top get hats
  // when the lattice is a chain of comparable extremes.
  return "[" + t.name(basepoint[X]) + "]";
}

SupportLattice support_lattice(const MulTable& t) {
  require_band(t);
  SupportLattice lat;

  // Distinct principal ideals, as sorted element sets.
  std::vector<std::vector<int>> ideal_of(t.n);
  for (int a = 0; a < t.n; ++a) ideal_of[a] = principal_ideal(t, a);
  std::vector<std::vector<int>> supports;  // distinct ideals
  std::vector<int> raw_sigma(t.n);
  for (int a = 0; a < t.n; ++a) {
    auto it = std::find(supports.begin(), supports.end(), ideal_of[a]);
    if (it == supports.end()) {
      supports.push_back(ideal_of[a]);
      raw_sigma[a] = (int)supports.size() - 1;
    } else {
      raw_sigma[a] = (int)(it - supports.begin());
    }
  }
  int m = (int)supports.size();

  auto contains = [&](int big, int small) {
    return std::includes(supports[big].begin(), supports[big].end(),
                         supports[small].begin(), supports[small].end());
  };

  // Rank = longest chain strictly below, via inclusion order.
  std::vector<int> raw_rank(m, 0);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return supports[a].size() < supports[b].size();
  });
  for (int x : order)
    for (int y : order)
      if (y != x && contains(x, y))
        raw_rank[x] = std::max(raw_rank[x], raw_rank[y] + 1);

  // Canonical order: (rank, smallest contained element index).
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  // tie-break by the smallest element of the support *class*, not the ideal
  std::vector<int> least(m, t.n);
  for (int x = t.n - 1; x >= 0; --x) least[raw_sigma[x]] = x;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (raw_rank[a] != raw_rank[b]) return raw_rank[a] < raw_rank[b];
    return least[a] < least[b];
  });
  std::vector<int> newidx(m);
  for (int i = 0; i < m; ++i) newidx[perm[i]] = i;

  lat.m = m;
  lat.sigma.resize(t.n);
  for (int a = 0; a < t.n; ++a) lat.sigma[a] = newidx[raw_sigma[a]];
  lat.rank.resize(m);
  for (int i = 0; i < m; ++i) lat.rank[i] = raw_rank[perm[i]];
  lat.leq.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      lat.leq[i][j] = contains(perm[j], perm[i]);
  lat.meet.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      lat.meet[lat.sigma[a]][lat.sigma[b]] = lat.sigma[t.mul(a, b)];
  lat.classes.assign(m, {});
  for (int a = 0; a < t.n; ++a) lat.classes[lat.sigma[a]].push_back(a);
  lat.basepoint.resize(m);
  for (int X = 0; X < m; ++X) lat.basepoint[X] = lat.classes[X].front();

  // Moebius by recursion over intervals: sum_{Y<=Z<=X} mu(Y,Z) = [Y=X].
  lat.mobius.assign(m, std::vector<long long>(m, 0));
  for (int Y = 0; Y < m; ++Y) {
    lat.mobius[Y][Y] = 1;
    // process X in increasing rank order so smaller intervals are done
    std::vector<int> xs;
    for (int X = 0; X < m; ++X)
      if (lat.leq[Y][X] && X != Y) xs.push_back(X);
    std::sort(xs.begin(), xs.end(),
              [&](int a, int b) { return lat.rank[a] < lat.rank[b]; });
    for (int X : xs) {
      long long s = 0;
      for (int Z = 0; Z < m; ++Z)
        if (lat.leq[Y][Z] && lat.leq[Z][X] && Z != X) s += lat.mobius[Y][Z];
      lat.mobius[Y][X] = -s;
    }
  }
  return lat;
}

void label_components(SimpleGraph& g) {
  int n = (int)g.vertices.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) parent[find(u)] = find(v);
  std::map<int, int> label;
  g.component.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = label.find(r);
    if (it == label.end()) it = label.emplace(r, (int)label.size()).first;
    g.component[i] = it->second;
  }
  g.num_components = (int)label.size();
}

SimpleGraph gamma_global(const MulTable& t, const SupportLattice& lat, int X,
                         Side side) {
  if (X < 0 || X >= lat.m) throw BadSupport("gamma_global: bad support");
  SimpleGraph g;
  g.vertices = lat.classes[X];
  int k = (int)g.vertices.size();
  auto leq = [&](int a, int b) {
    return side == Side::R ? t.mul(b, a) == a : t.mul(a, b) == a;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      for (int y = 0; y < t.n; ++y)
        if (leq(g.vertices[i], y) && leq(g.vertices[j], y)) {
          g.edges.emplace_back(i, j);
          break;
        }
    }
  label_components(g);
  return g;
}

std::optional<DisconnectWitness> find_disconnect(const MulTable& t,
                                                 const SupportLattice& lat) {
  for (int X = 0; X < lat.m; ++X)
    for (Side side : {Side::R, Side::L}) {
      SimpleGraph g = gamma_global(t, lat, X, side);
      if (g.num_components > 1) return DisconnectWitness{X, side, g};
    }
  return std::nullopt;
}

bool is_connected(const MulTable& t, const SupportLattice& lat) {
  return !find_disconnect(t, lat).has_value();
}

std::vector<int> tau_vector(const SupportLattice& lat, int b) {
  if (b < 0 || b >= (int)lat.sigma.size())
    throw RangeError("tau_vector: bad element");
  std::vector<int> v(lat.m, 0);
  for (int Y = 0; Y < lat.m; ++Y) v[Y] = lat.leq[Y][lat.sigma[b]] ? 1 : 0;
  return v;
}

std::string graph_dot(const MulTable& t, const SimpleGraph& g) {
  std::string s = "graph {\n";
  for (int v : g.vertices) s += "  \"" + t.name(v) + "\";\n";
  for (auto [i, j] : g.edges)
    s += "  \"" + t.name(g.vertices[i]) + "\" -- \"" +
         t.name(g.vertices[j]) + "\";\n";
  s += "}\n";
  return s;
}

}  // namespace bandq
