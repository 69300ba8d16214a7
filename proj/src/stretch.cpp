#include "outerdraw/stretch.hpp"

namespace outerdraw {

std::array<Functional, 3> placement_functionals(Placement c) {
  if (c == Placement::Case1) return {{{1, 1}, {1, 0}, {1, -1}}};
  return {{{1, -1}, {-1, 0}, {0, 1}}};
}

LinearSystem build_lp_k3(const Permutation& p1, const Permutation& p2, const Permutation& p3,
                         Placement c) {
  const int n = p1.size();
  if (p2.size() != n || p3.size() != n) throw InputError("rotations act on different ground sets");
  LinearSystem sys;
  sys.variables = 2 * n;
  const auto fs = placement_functionals(c);
  const Permutation* perms[] = {&p1, &p2, &p3};
  for (int r = 0; r < 3; ++r) {
    const Functional& f = fs[r];
    const Permutation& p = *perms[r];
    for (int t = 0; t + 1 < n; ++t) {
      // f(p[t]) - f(p[t+1]) < 0
      const int u = p[t] - 1, v = p[t + 1] - 1;
      std::map<int, Rational> row;
      auto add = [&](int var, const Rational& coef) {
        if (coef != 0) row[var] += coef;
      };
      add(2 * u, f.a);
      add(2 * u + 1, f.b);
      add(2 * v, -f.a);
      add(2 * v + 1, -f.b);
      sys.strict.push_back(std::move(row));
    }
  }
  return sys;
}

std::optional<RotationSystem> rotations_of(const std::vector<Point>& pts, Placement c) {
  RotationSystem rs;
  for (const auto& f : placement_functionals(c)) {
    auto p = order_by_functional(pts, f.a, f.b);
    if (!p) return std::nullopt;
    rs.perms.push_back(*p);
  }
  return rs;
}

std::optional<std::vector<Point>> straightline_case(const Permutation& p1, const Permutation& p2,
                                                    const Permutation& p3, Placement c) {
  const auto z = lp_feasible(build_lp_k3(p1, p2, p3, c));
  if (!z) return std::nullopt;
  std::vector<Point> pts;
  for (int v = 0; v < p1.size(); ++v) pts.push_back({(*z)[2 * v], (*z)[2 * v + 1]});
  return pts;
}

std::optional<StraightLineWitness> straightline_k3(const Permutation& p1, const Permutation& p2,
                                                   const Permutation& p3) {
  for (Placement c : {Placement::Case1, Placement::Case2}) {
    auto pts = straightline_case(p1, p2, p3, c);
    if (!pts) continue;
    const auto back = rotations_of(*pts, c);
    if (!back || back->perms != std::vector<Permutation>{p1, p2, p3})
      throw std::logic_error("straight-line witness does not reproduce its rotations");
    return StraightLineWitness{c, std::move(*pts)};
  }
  return std::nullopt;
}

bool extendable_bruteforce(const std::vector<Permutation>& perms, int guard) {
  return is_suballowable_bruteforce(perms, guard);
}

}  // namespace outerdraw
