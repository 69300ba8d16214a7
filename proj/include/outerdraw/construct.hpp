#pragma once

// Constructive side of the k = 2 theory: wiring diagrams of colored
// quasi-pseudoline arrangements, the local sequences of the completed
// pseudoline arrangement, and realize_k2 which turns a consistent table into
// a diagram.
//
// A diagram is swept from p_1 (left) to p_2 (right). Curves start top to
// bottom in the order 1..n; curve i is red (its edge to p_1) until its
// VERTEX event and blue (its edge to p_2) afterwards.

#include <string>
#include <vector>

#include "outerdraw/core.hpp"

namespace outerdraw {

struct WiringEvent {
  enum class Kind : std::uint8_t { Swap, Vertex };
  Kind kind = Kind::Swap;
  /// Swap: 0-based position of the upper curve (it trades places with the
  /// curve below). Vertex: curve label.
  int value = 0;

  static WiringEvent swap(int pos) { return {Kind::Swap, pos}; }
  static WiringEvent vertex(int curve) { return {Kind::Vertex, curve}; }
  bool operator==(const WiringEvent&) const = default;
};

struct WiringDiagram {
  int n = 0;
  std::vector<WiringEvent> events;

  /// Throws InputError describing the first broken invariant: positions out
  /// of range, missing or repeated VERTEX events, monochromatic swaps, a pair
  /// swapping twice.
  void validate() const;
  /// Top-to-bottom order after all events.
  Permutation final_order() const;
  std::size_t swap_count() const;
  bool operator==(const WiringDiagram&) const = default;
};

/// N for pairs that never swap; for u < v a swap of red(u) with blue(v) is A
/// and blue(u) with red(v) is B. Validates first.
Table2 extract_table(const WiringDiagram& d);

/// Arrangement appended to the right of a drawing whose right order is `pi`:
/// insertion-sorts `pi` into the reversal, so curves i and j cross exactly
/// when {i,j} is a non-inversion of pi.
struct TArrangement {
  Permutation start;
  std::vector<int> swaps;  // upper 0-based positions

  /// Unordered pairs that cross, in sweep order.
  std::vector<std::pair<int, int>> crossings() const;
  /// Order in which curve i meets the others inside T.
  std::vector<int> meets(int i) const;
};

TArrangement build_T_arrangement(const Permutation& pi);

/// alpha[i-1] lists the curves met by pseudoline i in sweep order; the
/// first red[i-1] entries lie on the red part and the next blue[i-1] entries
/// on the blue part, the rest inside T.
struct LocalSequences {
  std::vector<std::vector<int>> alpha;
  std::vector<int> red;
  std::vector<int> blue;
};

/// Throws std::logic_error if a crossing-order tournament has a cycle
/// (cannot happen for tables accepted by check_k2).
LocalSequences local_sequences(const Table2& t, const TArrangement& T);

/// The inversion-set condition for local sequences of a pseudoline
/// arrangement: ij in inv(alpha_k) <=> ik in inv(alpha_j) <=> jk in inv(alpha_i)
/// for all i < j < k. Also checks that each alpha_i is a permutation of the
/// other curves.
bool local_sequences_valid(const LocalSequences& ls);

/// Diagram realizing a consistent table, or the checker's witness.
Result<WiringDiagram> realize_k2(const Table2& t);

}  // namespace outerdraw
