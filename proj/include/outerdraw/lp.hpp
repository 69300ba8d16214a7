#pragma once

// Exact rational feasibility for small systems of homogeneous strict
// inequalities. Homogeneity means sum c_j z_j < 0 is feasible iff
// sum c_j z_j <= -1 is, so the solver works with the margin-1 version.

#include <map>
#include <optional>
#include <vector>

#include "outerdraw/core.hpp"

namespace outerdraw {

struct LinearSystem {
  int variables = 0;
  /// Each row stands for  sum_j row[j] * z_j < 0.
  std::vector<std::map<int, Rational>> strict;

  bool satisfied_by(const std::vector<Rational>& z) const;
};

/// Free variables z with A z <= b, or nullopt. Phase 1 of the simplex
/// method over the rationals with Bland's rule (terminates on degenerate
/// problems).
std::optional<std::vector<Rational>> solve_leq(const std::vector<std::vector<Rational>>& A,
                                                const std::vector<Rational>& b);

/// Witness for a system of strict homogeneous inequalities (margin 1), or
/// nullopt if none exists.
std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& sys);

}  // namespace outerdraw
