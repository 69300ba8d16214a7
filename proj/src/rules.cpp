#include "outerdraw/rules.hpp"

#include <string>

namespace outerdraw {

bool legal_triple_uniform(int x, int y, int z, int k) {
  for (int s : {x, y, z})
    if (s < 1 || s > k)
      throw InputError("type symbol " + std::to_string(s) + " outside 1.." + std::to_string(k));
  return y == x || y == z;
}

bool quad_uniform_ok(const UniformTable& t, int a, int b, int c, int d) {
  const int x = t.at(a, c);
  if (t.at(b, c) != x || t.at(b, d) != x) return true;
  return t.at(a, d) == x;
}

bool legal_triple_2(PairType2 x, PairType2 y, PairType2 z) {
  using enum PairType2;
  if (y == x || y == z) return true;
  return (x == N && y == A && z == B) || (x == A && y == B && z == N);
}

bool quad_2_ok(const Table2& t, int a, int b, int c, int d) {
  using enum PairType2;
  const PairType2 x = t.at(a, c);
  if (x == N || t.at(b, c) != x || t.at(b, d) != x) return true;
  if (x == B) return t.at(a, b) == N || t.at(a, d) == B;
  return t.at(c, d) == N || t.at(a, d) == A;
}

std::optional<Violation> first_violation_2(const Table2& t) {
  const int n = t.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (!legal_triple_2(t.at(a, b), t.at(a, c), t.at(b, c))) return Violation{"triple", {}, {a, b, c}};
        for (int d = c + 1; d <= n; ++d)
          if (!quad_2_ok(t, a, b, c, d)) return Violation{"quadruple", {}, {a, b, c, d}};
      }
  return std::nullopt;
}

std::optional<Violation> first_violation_uniform(const UniformTable& t, int k) {
  const int n = t.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (!legal_triple_uniform(t.at(a, b), t.at(a, c), t.at(b, c), k))
          return Violation{"triple", {}, {a, b, c}};
        for (int d = c + 1; d <= n; ++d)
          if (!quad_uniform_ok(t, a, b, c, d)) return Violation{"quadruple", {}, {a, b, c, d}};
      }
  return std::nullopt;
}

}  // namespace outerdraw
