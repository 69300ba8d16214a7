#pragma once

// Domain types for outer drawings of complete bipartite graphs K_{k,n}.
//
// Conventions used throughout the library:
//  * Inner vertices (the side V) carry labels 1..n, outer vertices are
//    p_1..p_k in clockwise order on the outer boundary.
//  * A Permutation is a word listing the labels in order, e.g. [3,4,1,5,2].
//  * A RotationSystem holds, for every outer vertex, the counterclockwise
//    order in which it sees the inner vertices. The edges (u,p_i) and
//    (v,p_j) of a pair {u,v} cross (in one of the two possible ways) iff u
//    and v appear in the same relative order in pi_i and pi_j.
//  * A TypeTable<PairType2> for an ordered outer pair (L,R) is keyed by
//    labels. For a crossing pair let a be the vertex that comes first in
//    the rotation at L and b the other one; then
//        A  <=>  edge (a,L) crosses edge (b,R)
//        B  <=>  edge (a,R) crosses edge (b,L)
//    and N means that no edge of a crosses an edge of b.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace outerdraw {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input: bad labels, impossible crossing pairs,
/// missing tables.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `word` lists 1..n exactly once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// Label at 0-based position.
  int operator[](int pos) const { return word_[pos]; }
  /// 0-based position of `label`.
  int position(int label) const { return pos_[label - 1]; }
  bool before(int u, int v) const { return position(u) < position(v); }

  const std::vector<int>& word() const { return word_; }
  Permutation reversed() const;
  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)), treating words as maps pos+1 -> label.
  Permutation compose(const Permutation& other) const;
  /// Keeps only the labels in `labels` (relative order preserved) and
  /// renumbers them 1..m by their position in `labels`.
  Permutation restrict(std::span<const int> labels) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& o) const { return word_ <=> o.word_; }

  std::string to_string() const;

 private:
  std::vector<int> word_;
  std::vector<int> pos_;
};

struct RotationSystem {
  std::vector<Permutation> perms;

  int k() const { return static_cast<int>(perms.size()); }
  int n() const { return perms.empty() ? 0 : perms.front().size(); }
  /// Throws InputError if k < 2 or the ground sets differ.
  void validate() const;
  bool operator==(const RotationSystem&) const = default;
};

enum class PairType2 : std::uint8_t { A, B, N };
enum class K32Type : std::uint8_t { B1, B2, B3, W1, W2, W3 };

inline constexpr PairType2 kAllPairTypes2[] = {PairType2::A, PairType2::B, PairType2::N};
inline constexpr K32Type kAllK32Types[] = {K32Type::B1, K32Type::B2, K32Type::B3,
                                           K32Type::W1, K32Type::W2, K32Type::W3};

char to_char(PairType2 t);
std::string to_string(K32Type t);
PairType2 pair_type2_from_char(char c);
K32Type k32_type_from_string(const std::string& s);

/// Index of the unordered pair {u,v} (1-based labels, u != v) in the
/// lexicographic list (1,2),(1,3),...,(n-1,n).
inline std::size_t pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  const auto uu = static_cast<std::size_t>(u - 1);
  const auto nn = static_cast<std::size_t>(n);
  return uu * (2 * nn - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

/// Total assignment of a value to every unordered pair {u<v} of [n].
template <class T>
class TypeTable {
 public:
  TypeTable() = default;
  TypeTable(int n, T fill)
      : n_(n), entries_(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, fill) {
    if (n < 1) throw InputError("type table needs n >= 1");
  }

  int size() const { return n_; }
  std::size_t pair_count() const { return entries_.size(); }

  const T& at(int u, int v) const { return entries_[checked_index(u, v)]; }
  T& at(int u, int v) { return entries_[checked_index(u, v)]; }
  void set(int u, int v, T value) { at(u, v) = value; }

  const std::vector<T>& entries() const { return entries_; }
  std::vector<T>& entries() { return entries_; }

  /// Sub-table induced on `labels`; the i-th label becomes vertex i+1.
  TypeTable restrict(std::span<const int> labels) const {
    TypeTable out(static_cast<int>(labels.size()), T{});
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        out.at(static_cast<int>(i + 1), static_cast<int>(j + 1)) = at(labels[i], labels[j]);
    return out;
  }

  bool operator==(const TypeTable&) const = default;
  auto operator<=>(const TypeTable& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return entries_ <=> o.entries_;
  }

 private:
  std::size_t checked_index(int u, int v) const {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
      throw std::out_of_range("pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside table of size " + std::to_string(n_));
    return pair_index(n_, u, v);
  }

  int n_ = 0;
  std::vector<T> entries_;
};

using Table2 = TypeTable<PairType2>;
using UniformTable = TypeTable<int>;
using K32Table = TypeTable<K32Type>;

/// Ordered pair of outer vertices (1-based). For the k-ary checkers maps are
/// keyed by (i,j) with i < j.
using OuterPair = std::pair<int, int>;
using TableMap = std::map<OuterPair, Table2>;

struct EdgeRef {
  int outer = 0;  // index of p_i, 1-based
  int inner = 0;  // label in V, 1-based
  auto operator<=>(const EdgeRef&) const = default;
};

struct Crossing {
  EdgeRef first;
  EdgeRef second;
  /// Orders the two edges so that first < second.
  static Crossing make(EdgeRef a, EdgeRef b);
  auto operator<=>(const Crossing&) const = default;
};

struct ATGraph {
  int k = 0;
  int n = 0;
  std::set<Crossing> crossings;

  /// Throws InputError naming the offending pair.
  void validate() const;
  bool crosses(EdgeRef a, EdgeRef b) const { return crossings.count(Crossing::make(a, b)) > 0; }
  bool operator==(const ATGraph&) const = default;
};

struct Violation {
  std::string rule;
  std::vector<int> outer;  // outer vertices involved (may be empty for k = 2)
  std::vector<int> inner;  // inner vertex labels
  bool operator==(const Violation&) const = default;
  std::string describe() const;
};

struct Verdict {
  bool consistent = true;
  std::optional<Violation> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(Violation v) { return {false, std::move(v)}; }
  explicit operator bool() const { return consistent; }
};

/// Value or a violation witness.
template <class T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}
  Result(Violation witness) : witness_(std::move(witness)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& value() const {
    if (!value_) throw std::logic_error("Result has no value: " + witness_->describe());
    return *value_;
  }
  const Violation& witness() const { return *witness_; }

 private:
  std::optional<T> value_;
  std::optional<Violation> witness_;
};

// ---------------------------------------------------------------------------
// Conversions

/// Tables for every ordered outer pair (i,j), i != j. Labels are taken to be
/// in the counterclockwise order of p_1; the order at p_i (i > 1) is
/// recovered pairwise from the crossings with the star of p_1.
std::map<OuterPair, Table2> types_from_crossings(const ATGraph& g);

/// Inverse of types_from_crossings. Accepts tables keyed by (i,j) with i < j,
/// optionally also (j,i); the latter must equal reverse_table of the former.
ATGraph crossings_from_types(const std::map<OuterPair, Table2>& tables, int k, int n);

/// Same drawing with the roles of the two outer vertices swapped (A <-> B).
Table2 reverse_table(const Table2& t);

/// Rotation at p_2 for a K_{2,n} table, read in the same direction as the
/// identity at p_1: a pair {u<v} keeps its order iff it has type N.
Result<Permutation> rotation_from_table2(const Table2& t);

/// Table re-indexed by positions in `order`: out(r,s) = t(order[r-1], order[s-1]).
Table2 in_frame(const Table2& t, const Permutation& order);

/// Counterclockwise rotation at R given the ccw rotation at L and the table
/// of (L,R).
Result<Permutation> partner_rotation(const Table2& t, const Permutation& left_ccw);

struct K32Projection {
  PairType2 t1, t2, t3;  // tables for (p3,p2), (p1,p3), (p2,p1)
  bool operator==(const K32Projection&) const = default;
};

K32Projection project_k32(K32Type t);
std::optional<K32Type> legal_k32(PairType2 t1, PairType2 t2, PairType2 t3);

/// C(n,2) * (C(k,2) - floor(k/2) * ceil(k/2)).
BigInt min_crossing_value(int k, int n);
/// floor(k/2) identities followed by ceil(k/2) reversals (ccw rotations).
RotationSystem min_crossing_rotation(int k, int n);

/// Number of crossing pairs of edges encoded by a table.
std::size_t crossing_count(const Table2& t);
std::size_t crossing_count(K32Type t);

BigInt binomial(int n, int k);

}  // namespace outerdraw
