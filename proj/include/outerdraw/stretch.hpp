#pragma once

// Straight-line outer drawings of K_{3,n}. Outer vertices go to points at
// infinity, so a drawing is a point set and the rotation at p_i is the
// order of the points under a linear functional. Two placements of the
// three directions cover all cases:
//
//   case 1: p1 = (-inf, inf), p2 = (0, inf), p3 = (inf, inf)
//           rotations increase in  x + y,  x,  x - y
//   case 2: p1 = (inf, inf), p2 = (0, -inf), p3 = (-inf, 0)
//           rotations increase in  x - y,  -x,  y
//
// Variables are x(v) = z[2(v-1)], y(v) = z[2(v-1)+1].

#include <array>
#include <optional>
#include <vector>

#include "outerdraw/core.hpp"
#include "outerdraw/lp.hpp"
#include "outerdraw/oracle.hpp"

namespace outerdraw {

enum class Placement : std::uint8_t { Case1 = 1, Case2 = 2 };

struct Functional {
  Rational a, b;  // a*x + b*y
};
std::array<Functional, 3> placement_functionals(Placement c);

/// One strict inequality per consecutive pair of each rotation.
LinearSystem build_lp_k3(const Permutation& p1, const Permutation& p2, const Permutation& p3,
                         Placement c);

/// Rotations seen from the three directions of `c`; nullopt on ties.
std::optional<RotationSystem> rotations_of(const std::vector<Point>& pts, Placement c);

struct StraightLineWitness {
  Placement placement;
  std::vector<Point> points;
};

/// Points for one placement, or nullopt if its system is infeasible.
std::optional<std::vector<Point>> straightline_case(const Permutation& p1, const Permutation& p2,
                                                    const Permutation& p3, Placement c);

/// Tries case 1, then case 2. A returned witness is re-checked: its
/// rotations reproduce the input exactly.
std::optional<StraightLineWitness> straightline_k3(const Permutation& p1, const Permutation& p2,
                                                   const Permutation& p3);

/// Extendable outer drawing exists iff the rotations form a suballowable
/// sequence; brute force, n <= guard.
bool extendable_bruteforce(const std::vector<Permutation>& perms, int guard = kDefaultGuard);

}  // namespace outerdraw
