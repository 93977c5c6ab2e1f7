#include "bandq/multable.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bandq {

std::string MulTable::name(int a) const {
  if (!names.empty() && a >= 0 && a < (int)names.size()) return names[a];
  return "e" + std::to_string(a);
}

static void check_shape(const MulTable& t) {
  if (t.n <= 0) throw RangeError("element count must be positive");
  if (t.n > kMaxElements)
    throw SizeLimit("n = " + std::to_string(t.n) + " exceeds limit " +
                    std::to_string(kMaxElements));
  if ((int)t.table.size() != t.n) throw RangeError("table has wrong row count");
  for (const auto& row : t.table) {
    if ((int)row.size() != t.n) throw RangeError("table row has wrong length");
    for (int x : row)
      if (x < 0 || x >= t.n)
        throw RangeError("table entry " + std::to_string(x) + " out of range");
  }
  if (t.identity && (*t.identity < 0 || *t.identity >= t.n))
    throw RangeError("identity index out of range");
}

BandReport validate(const MulTable& t) {
  check_shape(t);
  BandReport r;
  r.is_semigroup = true;
  for (int a = 0; a < t.n && r.is_semigroup; ++a)
    for (int b = 0; b < t.n && r.is_semigroup; ++b)
      for (int c = 0; c < t.n; ++c)
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) {
          r.is_semigroup = false;
          r.failing_triple = {a, b, c};
          break;
        }
  bool idem = true;
  for (int a = 0; a < t.n; ++a) idem = idem && t.mul(a, a) == a;
  r.is_band = r.is_semigroup && idem;
  if (r.is_band) {
    r.is_left_regular = true;
    for (int a = 0; a < t.n && r.is_left_regular; ++a)
      for (int b = 0; b < t.n; ++b)
        if (t.mul(t.mul(a, b), a) != t.mul(a, b)) {
          r.is_left_regular = false;
          break;
        }
  }
  for (int e = 0; e < t.n && r.is_semigroup && !r.is_monoid; ++e) {
    bool ok = true;
    for (int x = 0; x < t.n; ++x)
      ok = ok && t.mul(e, x) == x && t.mul(x, e) == x;
    r.is_monoid = ok;
  }
  return r;
}

void require_band(const MulTable& t) {
  BandReport r = validate(t);
  if (!r.is_band) {
    if (r.failing_triple) {
      auto [a, b, c] = *r.failing_triple;
      throw NotABand("not associative at (" + t.name(a) + "," + t.name(b) +
                     "," + t.name(c) + ")");
    }
    throw NotABand("not idempotent");
  }
}

GreenData green(const MulTable& t) {
  require_band(t);
  GreenData g;
  g.leqR.assign(t.n, std::vector<char>(t.n, 0));
  g.leqL.assign(t.n, std::vector<char>(t.n, 0));
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      g.leqR[a][b] = t.mul(b, a) == a;
      g.leqL[a][b] = t.mul(a, b) == a;
    }
  return g;
}

std::vector<int> principal_ideal(const MulTable& t, int a) {
  std::set<int> ideal;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      ideal.insert(t.mul(t.mul(x, a), y));
  return {ideal.begin(), ideal.end()};
}

bool check_clifford(const MulTable& t) {
  require_band(t);
  std::vector<std::vector<int>> ideals(t.n);
  for (int a = 0; a < t.n; ++a) ideals[a] = principal_ideal(t, a);
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      std::vector<int> meet;
      std::set_intersection(ideals[a].begin(), ideals[a].end(),
                            ideals[b].begin(), ideals[b].end(),
                            std::back_inserter(meet));
      if (meet != ideals[t.mul(a, b)]) return false;
    }
  return true;
}

bool check_swallow_delete(const MulTable& t) {
  require_band(t);
  std::vector<std::vector<int>> ideals(t.n);
  for (int a = 0; a < t.n; ++a) ideals[a] = principal_ideal(t, a);
  auto contains = [&](const std::vector<int>& big, const std::vector<int>& sm) {
    return std::includes(big.begin(), big.end(), sm.begin(), sm.end());
  };
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      bool a_in_BbB = std::binary_search(ideals[b].begin(), ideals[b].end(), a);
      if (a_in_BbB && t.mul(t.mul(a, b), a) != a) return false;
      for (int c = 0; c < t.n; ++c)
        if (ideals[a] == ideals[c] && contains(ideals[b], ideals[a]))
          if (t.mul(t.mul(a, b), c) != t.mul(a, c)) return false;
    }
  return true;
}

// ---- constructors ----

static MulTable finish(MulTable t, bool must_be_band = true) {
  check_shape(t);
  if (must_be_band) require_band(t);
  return t;
}

MulTable from_table(int n, std::vector<std::vector<int>> table,
                    std::optional<int> identity,
                    std::vector<std::string> names) {
  MulTable t{n, std::move(table), identity, std::move(names)};
  check_shape(t);
  if (t.identity) {
    int e = *t.identity;
    for (int x = 0; x < n; ++x)
      if (t.mul(e, x) != x || t.mul(x, e) != x)
        throw RangeError("declared identity is not an identity");
  }
  return t;  // band-ness is checked by operations, not at load
}

MulTable left_zero(int n) {
  MulTable t;
  t.n = n;
  t.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.table[a][b] = a;
  return finish(std::move(t));
}

MulTable right_zero(int n) {
  MulTable t;
  t.n = n;
  t.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.table[a][b] = b;
  return finish(std::move(t));
}

MulTable rectangular(int rows, int cols) {
  if (rows <= 0 || cols <= 0) throw RangeError("rectangular: bad dimensions");
  if (rows * cols > kMaxElements) throw SizeLimit("rectangular band too large");
  MulTable t;
  t.n = rows * cols;
  t.table.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      for (int k = 0; k < rows; ++k)
        for (int l = 0; l < cols; ++l)
          t.table[i * cols + j][k * cols + l] = i * cols + l;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      t.names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return finish(std::move(t));
}

MulTable semilattice(std::vector<std::vector<int>> meet,
                     std::vector<std::string> names) {
  MulTable t;
  t.n = (int)meet.size();
  t.table = std::move(meet);
  t.names = std::move(names);
  check_shape(t);
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (t.mul(a, b) != t.mul(b, a))
        throw NotABand("meet table is not commutative");
  return finish(std::move(t));
}

MulTable chain_semilattice(int n) {
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) meet[a][b] = std::min(a, b);
  auto t = semilattice(std::move(meet));
  t.identity = n - 1;
  return t;
}

MulTable free_lrb_with_identity(int k) {
  if (k < 1 || k > 4) throw SizeLimit("free_lrb_with_identity: need 1 <= k <= 4");
  // Words with distinct letters, length-major then lexicographic.
  std::vector<std::string> words;
  std::vector<std::vector<std::string>> by_len(k + 1);
  by_len[0] = {""};
  for (int len = 1; len <= k; ++len) {
    for (const auto& w : by_len[len - 1])
      for (char c = 'a'; c < 'a' + k; ++c)
        if (w.find(c) == std::string::npos) by_len[len].push_back(w + c);
    std::sort(by_len[len].begin(), by_len[len].end());
  }
  words.clear();
  for (auto& v : by_len) words.insert(words.end(), v.begin(), v.end());
  std::map<std::string, int> index;
  for (int i = 0; i < (int)words.size(); ++i) index[words[i]] = i;
  auto reduce = [](const std::string& u, const std::string& v) {
    std::string r = u;
    for (char c : v)
      if (r.find(c) == std::string::npos) r += c;
    return r;
  };
  MulTable t;
  t.n = (int)words.size();
  t.identity = 0;
  t.table.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      t.table[i][j] = index[reduce(words[i], words[j])];
  for (auto& w : words) t.names.push_back(w.empty() ? "1" : w);
  return finish(std::move(t));
}

MulTable sign_face_monoid(int n) {
  if (n < 1 || n > 3) throw SizeLimit("sign_face_monoid: need 1 <= n <= 3");
  int size = 1;
  for (int i = 0; i < n; ++i) size *= 3;
  auto digit = [&](int v, int pos) {  // pos 0 = most significant
    for (int i = n - 1; i > pos; --i) v /= 3;
    return v % 3;
  };
  MulTable t;
  t.n = size;
  t.identity = 0;
  t.table.assign(size, std::vector<int>(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      int v = 0;
      for (int pos = 0; pos < n; ++pos) {
        int dx = digit(x, pos), dy = digit(y, pos);
        v = v * 3 + (dx != 0 ? dx : dy);
      }
      t.table[x][y] = v;
    }
  const char* sym = "0+-";
  for (int x = 0; x < size; ++x) {
    std::string s;
    for (int pos = 0; pos < n; ++pos) s += sym[digit(x, pos)];
    t.names.push_back(s);
  }
  return finish(std::move(t));
}

MulTable direct_product(const MulTable& t1, const MulTable& t2) {
  if ((long long)t1.n * t2.n > kMaxElements)
    throw SizeLimit("direct product too large");
  MulTable t;
  t.n = t1.n * t2.n;
  t.table.assign(t.n, std::vector<int>(t.n));
  for (int a1 = 0; a1 < t1.n; ++a1)
    for (int a2 = 0; a2 < t2.n; ++a2)
      for (int b1 = 0; b1 < t1.n; ++b1)
        for (int b2 = 0; b2 < t2.n; ++b2)
          t.table[a1 * t2.n + a2][b1 * t2.n + b2] =
              t1.mul(a1, b1) * t2.n + t2.mul(a2, b2);
  if (t1.identity && t2.identity)
    t.identity = *t1.identity * t2.n + *t2.identity;
  for (int a1 = 0; a1 < t1.n; ++a1)
    for (int a2 = 0; a2 < t2.n; ++a2)
      t.names.push_back("(" + t1.name(a1) + "," + t2.name(a2) + ")");
  return finish(std::move(t));
}

MulTable adjoin_identity(const MulTable& t0) {
  if (t0.n + 1 > kMaxElements) throw SizeLimit("adjoin_identity: too large");
  MulTable t;
  t.n = t0.n + 1;
  t.identity = 0;
  t.table.assign(t.n, std::vector<int>(t.n));
  for (int x = 0; x < t.n; ++x) t.table[0][x] = t.table[x][0] = x;
  for (int a = 0; a < t0.n; ++a)
    for (int b = 0; b < t0.n; ++b) t.table[a + 1][b + 1] = t0.mul(a, b) + 1;
  t.names.push_back("1");
  for (int a = 0; a < t0.n; ++a) t.names.push_back(t0.name(a));
  return finish(std::move(t));
}

MulTable b5_example() {
  // Canonical order [1, a, b, ab, ba]; relations a^2=a, b^2=b, aba=a, bab=b.
  enum { one, a, b, ab, ba };
  std::vector<std::vector<int>> m(5, std::vector<int>(5));
  auto set_row = [&](int x, std::initializer_list<int> vals) {
    int j = 0;
    for (int v : vals) m[x][j++] = v;
  };
  set_row(one, {one, a, b, ab, ba});
  set_row(a, {a, a, ab, ab, a});     // a*b = ab, a*ab = ab, a*ba = aba = a
  set_row(b, {b, ba, b, b, ba});     // b*a = ba, b*ab = bab = b, b*ba = ba
  set_row(ab, {ab, a, ab, ab, a});   // ab*a = a, ab*b = ab, ab*ba = a
  set_row(ba, {ba, ba, b, b, ba});   // ba*a = ba, ba*b = b, ba*ab = b
  MulTable t;
  t.n = 5;
  t.identity = one;
  t.table = std::move(m);
  t.names = {"1", "a", "b", "ab", "ba"};
  return finish(std::move(t));
}

}  // namespace bandq
