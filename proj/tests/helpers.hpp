#pragma once

#include <functional>
#include <random>
#include <string>
#include <string_view>

#include "outerdraw/core.hpp"

namespace outerdraw::testing {

/// Table from letters listed in pair order (1,2),(1,3),...,(n-1,n).
inline Table2 table_from(int n, std::string_view letters) {
  Table2 t(n, PairType2::N);
  if (letters.size() != t.pair_count()) throw std::invalid_argument("wrong number of letters");
  for (std::size_t i = 0; i < letters.size(); ++i) t.entries()[i] = pair_type2_from_char(letters[i]);
  return t;
}

inline std::string letters_of(const Table2& t) {
  std::string s;
  for (PairType2 x : t.entries()) s += to_char(x);
  return s;
}

/// Calls f on all 3^C(n,2) tables.
inline void for_each_table2(int n, const std::function<void(const Table2&)>& f) {
  Table2 t(n, PairType2::N);
  const std::size_t m = t.pair_count();
  std::vector<int> digit(m, 0);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) t.entries()[i] = kAllPairTypes2[digit[i]];
    f(t);
    std::size_t i = 0;
    while (i < m && digit[i] == 2) digit[i++] = 0;
    if (i == m) return;
    ++digit[i];
  }
}

inline void for_each_uniform_table(int k, int n, const std::function<void(const UniformTable&)>& f) {
  UniformTable t(n, 1);
  const std::size_t m = t.pair_count();
  for (;;) {
    f(t);
    std::size_t i = 0;
    while (i < m && t.entries()[i] == k) t.entries()[i++] = 1;
    if (i == m) return;
    ++t.entries()[i];
  }
}

/// Table of a random wiring-diagram drawing: a random legal sweep. Always
/// realizable, so it is a source of random consistent tables.
inline Table2 random_drawing_table(int n, std::mt19937_64& rng) {
  Table2 t(n, PairType2::N);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::vector<bool> fired(static_cast<std::size_t>(n) + 1, false);
  int left = n;
  while (left > 0) {
    std::vector<int> moves;  // >0: fire curve, <=0: swap at -move
    for (int c = 1; c <= n; ++c)
      if (!fired[c]) moves.push_back(c);
    for (int p = 0; p + 1 < n; ++p) {
      const int x = order[p], y = order[p + 1];
      if (fired[x] != fired[y] && t.at(x, y) == PairType2::N) {
        moves.push_back(-p);
        moves.push_back(-p);  // favour crossings a little
      }
    }
    const int mv = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    if (mv > 0) {
      fired[mv] = true;
      --left;
      continue;
    }
    const int p = -mv, x = order[p], y = order[p + 1];
    const int u = std::min(x, y), v = std::max(x, y);
    t.at(u, v) = fired[u] ? PairType2::B : PairType2::A;
    std::swap(order[p], order[p + 1]);
  }
  return t;
}

inline std::string data_path(const std::string& name) { return std::string(OUTERDRAW_DATA_DIR) + "/" + name; }

}  // namespace outerdraw::testing
