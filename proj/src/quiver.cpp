#include "bandq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bandq {

namespace {

void finish_components_and_reps(const MulTable& t, const SupportLattice& lat,
                                LocalGraph& g) {
  SimpleGraph tmp;
  tmp.vertices = g.vertices;
  tmp.edges = g.edges;
  label_components(tmp);
  g.component = tmp.component;
  g.num_components = tmp.num_components;

  int fX = lat.basepoint[g.X];
  int fY = lat.basepoint[g.Y];
  int fYfX = t.mul(fY, fX);
  g.basepoint_rep = fYfX;
  auto in_fYBfX = [&](int z) { return t.mul(t.mul(fY, z), fX) == z; };

  int bp_comp = -1;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    if (g.vertices[i] == fYfX) bp_comp = g.component[i];
  if (bp_comp < 0)
    throw BadPair("basepoint product is not a vertex of the local graph");

  g.reps.assign(g.num_components, -1);
  g.reps[bp_comp] = fYfX;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    int comp = g.component[i];
    int z = g.vertices[i];
    if (comp == bp_comp || !in_fYBfX(z)) continue;
    if (g.reps[comp] < 0 || z < g.reps[comp]) g.reps[comp] = z;
  }
  for (int c = 0; c < g.num_components; ++c)
    if (g.reps[c] < 0)
      throw BadPair("component without representative in f_Y B f_X");
}

}  // namespace

LocalGraph local_graph_R(const MulTable& t, const SupportLattice& lat, int X,
                         int Y) {
  if (X < 0 || X >= lat.m || Y < 0 || Y >= lat.m || !lat.lt(X, Y))
    throw BadPair("local_graph_R needs X < Y");
  LocalGraph g;
  g.kind = ArrowKind::RisingR;
  g.X = X;
  g.Y = Y;
  int fX = lat.basepoint[X];
  for (int z : lat.classes[X])
    if (t.mul(z, fX) == z) g.vertices.push_back(z);  // z in B*f_X

  std::map<int, int> vid;
  for (size_t i = 0; i < g.vertices.size(); ++i) vid[g.vertices[i]] = (int)i;
  auto add_edge = [&](int a, int b) {
    if (a != b) g.edges.emplace_back(vid.at(a), vid.at(b));
  };
  for (int a : g.vertices) {
    for (int b = 0; b < t.n; ++b)
      if (lat.leq[Y][lat.sigma[b]]) {
        int ba = t.mul(b, a);
        add_edge(a, ba);
      }
  }
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      int a = g.vertices[i], c = g.vertices[j];
      for (int b = 0; b < t.n; ++b)
        if (!lat.leq[Y][lat.sigma[b]] && t.mul(b, a) == a && t.mul(b, c) == c) {
          g.edges.emplace_back((int)i, (int)j);
          break;
        }
    }
  finish_components_and_reps(t, lat, g);
  return g;
}

LocalGraph local_graph_L(const MulTable& t, const SupportLattice& lat, int X,
                         int Y) {
  if (X < 0 || X >= lat.m || Y < 0 || Y >= lat.m || !lat.lt(Y, X))
    throw BadPair("local_graph_L needs X > Y");
  LocalGraph g;
  g.kind = ArrowKind::FallingL;
  g.X = X;
  g.Y = Y;
  int fY = lat.basepoint[Y];
  for (int z : lat.classes[Y])
    if (t.mul(fY, z) == z) g.vertices.push_back(z);  // z in f_Y*B

  std::map<int, int> vid;
  for (size_t i = 0; i < g.vertices.size(); ++i) vid[g.vertices[i]] = (int)i;
  auto add_edge = [&](int a, int b) {
    if (a != b) g.edges.emplace_back(vid.at(a), vid.at(b));
  };
  for (int a : g.vertices) {
    for (int b = 0; b < t.n; ++b)
      if (lat.leq[X][lat.sigma[b]]) {
        int ab = t.mul(a, b);
        add_edge(a, ab);
      }
  }
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      int a = g.vertices[i], c = g.vertices[j];
      for (int b = 0; b < t.n; ++b)
        if (!lat.leq[X][lat.sigma[b]] && t.mul(a, b) == a && t.mul(c, b) == c) {
          g.edges.emplace_back((int)i, (int)j);
          break;
        }
    }
  finish_components_and_reps(t, lat, g);
  return g;
}

int Quiver::arrow_count(int src, int dst) const {
  int k = 0;
  for (const auto& a : arrows)
    if (a.src == src && a.dst == dst) ++k;
  return k;
}

bool Quiver::is_acyclic() const {
  // DFS coloring over the support digraph.
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& a : arrows) adj[a.src].push_back(a.dst);
  std::vector<int> color(num_vertices, 0);
  std::vector<int> stack;
  for (int s = 0; s < num_vertices; ++s) {
    if (color[s]) continue;
    stack.push_back(s);
    std::vector<std::pair<int, size_t>> frames{{s, 0}};
    color[s] = 1;
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          frames.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        frames.pop_back();
      }
    }
  }
  return true;
}

long long Quiver::total_path_count() const {
  if (!is_acyclic()) throw Explosion("path count requested on cyclic quiver");
  // f(v) = 1 + sum over arrows v -> w of f(w); total = sum f(v).
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& a : arrows) adj[a.src].push_back(a.dst);
  std::vector<long long> f(num_vertices, -1);
  std::function<long long(int)> go = [&](int v) -> long long {
    if (f[v] >= 0) return f[v];
    long long s = 1;
    for (int w : adj[v]) s += go(w);
    return f[v] = s;
  };
  long long total = 0;
  for (int v = 0; v < num_vertices; ++v) total += go(v);
  return total;
}

static std::string arrow_name(int i) {
  static const char* greek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ",
                                "ι", "κ", "λ", "μ", "ν", "ξ", "ο", "π",
                                "ρ", "ς", "τ", "υ"};
  if (i < 20) return greek[i];
  return "a" + std::to_string(i);
}

Quiver build_quiver(const MulTable& t, const SupportLattice& lat) {
  if (!is_connected(t, lat))
    throw NotConnected("quiver construction needs a connected band");
  Quiver q;
  q.num_vertices = lat.m;
  for (int dst = 0; dst < lat.m; ++dst)
    for (int src = 0; src < lat.m; ++src) {
      if (src == dst) continue;
      LocalGraph g;
      if (lat.lt(src, dst))
        g = local_graph_R(t, lat, src, dst);
      else if (lat.lt(dst, src))
        g = local_graph_L(t, lat, src, dst);
      else
        continue;
      std::vector<int> labels;
      for (int rep : g.reps)
        if (rep != g.basepoint_rep) labels.push_back(rep);
      std::sort(labels.begin(), labels.end());
      for (int rep : labels) {
        Arrow a;
        a.src = src;
        a.dst = dst;
        a.label = rep;
        a.kind = g.kind;
        a.name = arrow_name((int)q.arrows.size());
        q.arrows.push_back(a);
      }
    }
  return q;
}

bool lrb_shortcut_check(const MulTable& t, const SupportLattice& lat, int X,
                        int Y) {
  if (!validate(t).is_left_regular)
    throw NotLeftRegular("lrb_shortcut_check needs a left regular band");
  if (!lat.lt(X, Y)) throw BadPair("lrb_shortcut_check needs X < Y");
  int fX = lat.basepoint[X];
  int fY = lat.basepoint[Y];
  SimpleGraph g;
  for (int z : lat.classes[X])
    if (t.mul(t.mul(fY, z), fX) == z) g.vertices.push_back(z);
  auto lt_fY = [&](int b) {  // b in B^{<_R f_Y}
    return t.mul(fY, b) == b && t.mul(b, fY) != fY;
  };
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      int a = g.vertices[i], c = g.vertices[j];
      for (int b = 0; b < t.n; ++b)
        if (lt_fY(b) && t.mul(b, a) == a && t.mul(b, c) == c) {
          g.edges.emplace_back((int)i, (int)j);
          break;
        }
    }
  label_components(g);
  LocalGraph full = local_graph_R(t, lat, X, Y);
  return g.num_components == full.num_components;
}

std::string quiver_dot(const MulTable& t, const SupportLattice& lat,
                       const Quiver& q) {
  std::string s = "digraph Q {\n";
  for (int X = 0; X < lat.m; ++X)
    s += "  v" + std::to_string(X) + " [label=\"" + lat.name(t, X) + "\"];\n";
  for (const auto& a : q.arrows)
    s += "  v" + std::to_string(a.src) + " -> v" + std::to_string(a.dst) +
         " [label=\"" + a.name + ": " + t.name(a.label) + "\"];\n";
  s += "}\n";
  return s;
}

}  // namespace bandq
