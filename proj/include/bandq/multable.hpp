#ifndef BANDQ_MULTABLE_HPP
#define BANDQ_MULTABLE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bandq/errors.hpp"

namespace bandq {

// Hard cap on element count; the presentation pipeline is O(n^3)-O(n^4)
// with big-integer HNF behind it.
inline constexpr int kMaxElements = 512;

/// A finite semigroup (or candidate semigroup) given by its Cayley table
/// over canonical indices 0..n-1.  Non-band tables can be loaded; the
/// operations that require a band reject them with a diagnostic.
struct MulTable {
  int n = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::optional<int> identity;
  std::vector<std::string> names;  // display only; size n when present

  int mul(int a, int b) const { return table[a][b]; }

  std::string name(int a) const;
};

struct BandReport {
  bool is_semigroup = false;
  bool is_band = false;
  bool is_left_regular = false;
  bool is_monoid = false;
  // Witness of the first failing associativity triple, when not a semigroup.
  std::optional<std::array<int, 3>> failing_triple;
};

/// Checks the band axioms.  Throws RangeError if a table entry is out of
/// range; everything else is reported, not thrown.
BandReport validate(const MulTable& t);

/// Green preorders in band form: a <=_R b iff ba = a, a <=_L b iff ab = a.
struct GreenData {
  std::vector<std::vector<char>> leqR;  // leqR[a][b] = a <=_R b
  std::vector<std::vector<char>> leqL;

  bool strictR(int a, int b) const { return leqR[a][b] && !leqR[b][a]; }
  bool strictL(int a, int b) const { return leqL[a][b] && !leqL[b][a]; }
};

GreenData green(const MulTable& t);

/// Clifford's theorem: BaB n BbB = BabB for all pairs, by exhaustive
/// principal-ideal enumeration.
bool check_clifford(const MulTable& t);

/// Swallowing (a in BbB implies aba = a) and deletion
/// (BaB = BcB subset of BbB implies abc = ac).
bool check_swallow_delete(const MulTable& t);

/// The principal two-sided ideal BaB (as a sorted set of indices).
std::vector<int> principal_ideal(const MulTable& t, int a);

void require_band(const MulTable& t);

// ---- constructors ----
// Each returns a validated band; canonical element order is documented
// per constructor and fixture tests depend on it.

/// Elements in input order.
MulTable from_table(int n, std::vector<std::vector<int>> table,
                    std::optional<int> identity = std::nullopt,
                    std::vector<std::string> names = {});

MulTable left_zero(int n);   // u*v = u
MulTable right_zero(int n);  // u*v = v

/// (i,j)*(k,l) = (i,l); element (i,j) at index i*cols + j.
MulTable rectangular(int rows, int cols);

/// A commutative band given by its meet table (validated).
MulTable semilattice(std::vector<std::vector<int>> meet,
                     std::vector<std::string> names = {});

/// Chain semilattice 0 < 1 < ... < n-1 with meet = min.
MulTable chain_semilattice(int n);

/// Free left regular band with identity on an alphabet of k <= 4 letters.
/// Elements are words with distinct letters (including the empty word),
/// ordered by length then lexicographically; the product concatenates and
/// deletes repeated letters keeping first occurrences.
MulTable free_lrb_with_identity(int k);

/// Sign-vector face monoid on {0,+,-}^n, n <= 3.  Product
/// (x*y)_i = x_i if x_i != 0 else y_i; identity is the all-zero vector.
/// Index = base-3 value of the vector with digits 0,+,- -> 0,1,2, most
/// significant coordinate first; the identity gets index 0.
MulTable sign_face_monoid(int n);

/// Index of (i1,i2) is i1*t2.n + i2.
MulTable direct_product(const MulTable& t1, const MulTable& t2);

/// New identity at index 0; old elements shifted up by one.
MulTable adjoin_identity(const MulTable& t);

/// The 5-element band <a,b | a^2=a, b^2=b, aba=a, bab=b> in the canonical
/// order [1, a, b, ab, ba].
MulTable b5_example();

}  // namespace bandq

#endif
