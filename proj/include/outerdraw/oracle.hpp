#pragma once

// Brute-force ground truth used by the tests: exhaustive K_{2,n} drawings,
// allowable sequences, and random straight-line instances.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "outerdraw/core.hpp"

namespace outerdraw {

/// Default size limit for the exhaustive enumerations; raise with `guard`.
inline constexpr int kDefaultGuard = 5;

/// Every table realized by some wiring diagram on n curves, found by DFS
/// over event sequences (states deduplicated by fired vertices + partial
/// table). Throws InputError if n > guard.
std::set<Table2> enumerate_drawings_k2(int n, int guard = kDefaultGuard);

/// Half periods of the simple allowable sequences on [n]: the C(n,2)+1
/// permutations from the identity to the reversal, one adjacent
/// transposition per step, each pair swapped once.
std::vector<std::vector<Permutation>> enumerate_allowable(int n, int guard = kDefaultGuard);

/// Does some allowable sequence contain `perms` as a subsequence (in
/// circular order, any starting point)? Consecutive equal permutations may
/// share a position of the sequence.
bool is_suballowable_bruteforce(const std::vector<Permutation>& perms, int guard = kDefaultGuard);

struct Point {
  Rational x, y;
  bool operator==(const Point&) const = default;
};

/// Order of `pts` (labels 1..n) by increasing a*x + b*y; nullopt on a tie.
std::optional<Permutation> order_by_functional(const std::vector<Point>& pts, const Rational& a,
                                              const Rational& b);

struct PointsetInstance {
  RotationSystem rotations;  // k = 3
  std::vector<Point> points;
};

/// n random integer points in general position. Rotations are their orders
/// seen from p_1 = (inf,inf), p_2 = (0,-inf), p_3 = (-inf,0):
/// increasing x - y, decreasing x, increasing y.
PointsetInstance random_pointset_rotations(int n, std::uint64_t seed);

/// Random straight-line outer drawing of K_{k,n}: outer vertices are points
/// at infinity in k random directions (clockwise), edges are rays. Labels
/// follow the counterclockwise order at p_1.
struct RayDrawing {
  ATGraph graph;
  RotationSystem rotations;                // ccw orders at p_1..p_k
  std::vector<std::pair<long, long>> directions;
  std::vector<Point> points;
};
RayDrawing random_ray_drawing(int k, int n, std::uint64_t seed);

}  // namespace outerdraw
