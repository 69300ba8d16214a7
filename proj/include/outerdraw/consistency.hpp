#pragma once

// Whole-table deciders for outer drawings of K_{k,n}, AT-graph
// realizability, and backtracking search for type assignments compatible
// with a prescribed rotation system.

#include <array>
#include <optional>

#include "outerdraw/core.hpp"

namespace outerdraw {

/// K_{2,n}: every triple legal and every quadruple passes quad_2_ok. The
/// witness is the lexicographically first failing tuple.
Verdict check_k2(const Table2& t);

/// K_{3,n} from the tables of (p3,p2), (p1,p3) and (p2,p1).
Verdict check_k3(const Table2& t1, const Table2& t2, const Table2& t3);
Verdict check_k3(const K32Table& t);

/// Projections (T1,T2,T3) of a K_{3,2}-typed table.
std::array<Table2, 3> projections(const K32Table& t);
/// Tables keyed (1,2), (1,3), (2,3) equivalent to the projections.
TableMap tables_from_projections(const Table2& t1, const Table2& t2, const Table2& t3);

/// General k. `tables` must hold (i,j) for all 1 <= i < j <= k; entries for
/// (j,i) are accepted if they are the reverse of (i,j). Throws InputError on
/// missing tables, size or orientation mismatch.
///
/// For k >= 3 the K_{3,2} projection test on every outer triple and V-pair
/// runs first (O(k^3 n^2)); then each T_ij is checked with the triple and
/// quadruple rules in the frame of the rotation at p_i (O(k^2 n^4)).
Verdict check_general(int k, const TableMap& tables);

/// Counterclockwise rotations implied by a table map (p_1 is the identity).
Result<RotationSystem> rotations_from_tables(int k, const TableMap& tables);

/// Decides whether an outer drawing whose crossing pairs are exactly
/// g.crossings exists (labels in the ccw order of p_1).
Verdict realize_atgraph(const ATGraph& g);

/// Backtracking search for a consistent assignment realizing the rotations.
/// Exponential in the worst case. The returned tables use the library's
/// labelling: the r-th vertex of pi_1 is relabelled r, so that
/// rotations_from_tables gives back pi_1^{-1} o pi_i.
std::optional<TableMap> search_rotation(const RotationSystem& rs);
std::optional<K32Table> search_rotation_k3(const Permutation& p1, const Permutation& p2,
                                           const Permutation& p3);

/// Deletion-minimal set of inner vertices whose induced rotation system is
/// still infeasible. Empty if `rs` is feasible.
std::vector<int> minimal_infeasible_subset(const RotationSystem& rs);

}  // namespace outerdraw
