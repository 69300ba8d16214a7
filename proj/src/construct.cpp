#include "outerdraw/construct.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "outerdraw/consistency.hpp"

namespace outerdraw {

namespace {

std::string pair_str(int u, int v) {
  return "{" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + "}";
}

}  // namespace

void WiringDiagram::validate() const {
  if (n < 1) throw InputError("wiring diagram needs n >= 1");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::vector<bool> passed(static_cast<std::size_t>(n) + 1, false);
  std::set<std::pair<int, int>> swapped;
  for (std::size_t e = 0; e < events.size(); ++e) {
    const WiringEvent& ev = events[e];
    const std::string where = "event " + std::to_string(e) + ": ";
    if (ev.kind == WiringEvent::Kind::Vertex) {
      if (ev.value < 1 || ev.value > n) throw InputError(where + "vertex of unknown curve " + std::to_string(ev.value));
      if (passed[ev.value]) throw InputError(where + "curve " + std::to_string(ev.value) + " has two vertices");
      passed[ev.value] = true;
      continue;
    }
    if (ev.value < 0 || ev.value + 1 >= n)
      throw InputError(where + "swap position " + std::to_string(ev.value) + " out of range");
    const int u = order[ev.value], v = order[ev.value + 1];
    if (passed[u] == passed[v])
      throw InputError(where + "monochromatic swap of curves " + pair_str(u, v));
    if (!swapped.insert({std::min(u, v), std::max(u, v)}).second)
      throw InputError(where + "curves " + pair_str(u, v) + " swap twice");
    std::swap(order[ev.value], order[ev.value + 1]);
  }
  for (int i = 1; i <= n; ++i)
    if (!passed[i]) throw InputError("curve " + std::to_string(i) + " has no vertex");
}

Permutation WiringDiagram::final_order() const {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  for (const auto& ev : events)
    if (ev.kind == WiringEvent::Kind::Swap) std::swap(order.at(ev.value), order.at(ev.value + 1));
  return Permutation(std::move(order));
}

std::size_t WiringDiagram::swap_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const WiringEvent& e) {
    return e.kind == WiringEvent::Kind::Swap;
  }));
}

Table2 extract_table(const WiringDiagram& d) {
  d.validate();
  Table2 t(d.n, PairType2::N);
  std::vector<int> order(static_cast<std::size_t>(d.n));
  for (int i = 0; i < d.n; ++i) order[i] = i + 1;
  std::vector<bool> passed(static_cast<std::size_t>(d.n) + 1, false);
  for (const auto& ev : d.events) {
    if (ev.kind == WiringEvent::Kind::Vertex) {
      passed[ev.value] = true;
      continue;
    }
    const int x = order[ev.value], y = order[ev.value + 1];
    const int u = std::min(x, y), v = std::max(x, y);
    t.at(u, v) = passed[u] ? PairType2::B : PairType2::A;
    std::swap(order[ev.value], order[ev.value + 1]);
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> TArrangement::crossings() const {
  std::vector<int> order = start.word();
  std::vector<std::pair<int, int>> out;
  for (int p : swaps) {
    out.emplace_back(std::min(order[p], order[p + 1]), std::max(order[p], order[p + 1]));
    std::swap(order[p], order[p + 1]);
  }
  return out;
}

std::vector<int> TArrangement::meets(int i) const {
  std::vector<int> out;
  for (auto [u, v] : crossings()) {
    if (u == i) out.push_back(v);
    if (v == i) out.push_back(u);
  }
  return out;
}

TArrangement build_T_arrangement(const Permutation& pi) {
  TArrangement T{pi, {}};
  std::vector<int> order = pi.word();
  for (int i = 1; i < pi.size(); ++i)
    for (int p = i; p > 0 && order[p - 1] < order[p]; --p) {
      T.swaps.push_back(p - 1);
      std::swap(order[p - 1], order[p]);
    }
  return T;
}

// ---------------------------------------------------------------------------

namespace {

// Orders `items` by a tournament given as precedes(j, j'); the tournament
// must be transitive.
std::vector<int> order_by_tournament(const std::vector<int>& items,
                                     const std::function<bool(int, int)>& precedes, int curve) {
  const std::size_t m = items.size();
  std::vector<std::pair<int, int>> scored;  // (-score, item)
  for (std::size_t a = 0; a < m; ++a) {
    int score = 0;
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && precedes(items[a], items[b])) ++score;
    scored.emplace_back(-score, items[a]);
  }
  std::sort(scored.begin(), scored.end());
  for (std::size_t r = 0; r < m; ++r)
    if (-scored[r].first != static_cast<int>(m - 1 - r))
      throw std::logic_error("crossing order along curve " + std::to_string(curve) + " is cyclic");
  std::vector<int> out;
  for (auto [s, item] : scored) out.push_back(item);
  return out;
}

}  // namespace

LocalSequences local_sequences(const Table2& t, const TArrangement& T) {
  using enum PairType2;
  const int n = t.size();
  LocalSequences ls;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> red, blue;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const PairType2 x = t.at(i, j);
      if (x == N) continue;
      // red(i) x blue(j): j > i of type A, or j < i of type B
      const bool on_red = (j > i) == (x == A);
      (on_red ? red : blue).push_back(j);
    }
    auto blue_first = [&](int j, int jp) {
      if (j < i && jp < i) return j > jp;
      if (j > i && jp > i) return j < jp;
      if (j < i) return t.at(j, jp) == B;  // j in A_<(i), jp in B_>(i)
      return t.at(jp, j) == A;
    };
    auto red_first = [&](int j, int jp) {
      if (j > i && jp > i) return j < jp ? t.at(j, jp) == N : t.at(jp, j) != N;
      if (j < i && jp < i) return j > jp ? t.at(jp, j) == N : t.at(j, jp) != N;
      if (j < i) return t.at(j, jp) == B;  // j in B_<(i), jp in A_>(i)
      return t.at(jp, j) != B;
    };
    std::vector<int> alpha = order_by_tournament(red, red_first, i);
    const std::vector<int> b = order_by_tournament(blue, blue_first, i);
    alpha.insert(alpha.end(), b.begin(), b.end());
    const std::vector<int> rest = T.meets(i);
    alpha.insert(alpha.end(), rest.begin(), rest.end());
    ls.alpha.push_back(std::move(alpha));
    ls.red.push_back(static_cast<int>(red.size()));
    ls.blue.push_back(static_cast<int>(blue.size()));
  }
  return ls;
}

bool local_sequences_valid(const LocalSequences& ls) {
  const int n = static_cast<int>(ls.alpha.size());
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  for (int i = 1; i <= n; ++i) {
    const auto& a = ls.alpha[i - 1];
    if (static_cast<int>(a.size()) != n - 1) return false;
    for (int r = 0; r < n - 1; ++r) {
      const int j = a[r];
      if (j < 1 || j > n || j == i || pos[i][j] != -1) return false;
      pos[i][j] = r;
    }
  }
  // ij in inv(alpha_k): j met before i along k
  auto inv = [&](int k, int i, int j) { return pos[k][j] < pos[k][i]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const bool a = inv(k, i, j), b = inv(j, i, k), c = inv(i, j, k);
        if (a != b || b != c) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Greedy sweep of the pseudoline arrangement given by `ls`: fires VERTEX
// events and swaps of adjacent curves that are next on each other's local
// sequence. Drawing events (everything before T) go first; T is then swept
// only to confirm the sequences describe a complete arrangement.
WiringDiagram schedule(const LocalSequences& ls) {
  const int n = static_cast<int>(ls.alpha.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  // step[i]: items consumed on curve i; the vertex is item number red[i].
  std::vector<int> step(static_cast<std::size_t>(n) + 1, 0);
  auto length = [&](int i) { return static_cast<int>(ls.alpha[i - 1].size()) + 1; };
  auto is_vertex = [&](int i) { return step[i] == ls.red[i - 1]; };
  auto next_curve = [&](int i) {
    const int s = step[i];
    if (s >= length(i) || s == ls.red[i - 1]) return 0;
    return ls.alpha[i - 1][s < ls.red[i - 1] ? s : s - 1];
  };
  auto drawing_limit = [&](int i) { return ls.red[i - 1] + ls.blue[i - 1] + 1; };

  WiringDiagram d{n, {}};
  for (bool drawing : {true, false}) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 1; i <= n; ++i)
        if (drawing && is_vertex(i)) {
          d.events.push_back(WiringEvent::vertex(i));
          ++step[i];
          progress = true;
        }
      for (int p = 0; p + 1 < n; ++p) {
        const int x = order[p], y = order[p + 1];
        if (next_curve(x) != y || next_curve(y) != x) continue;
        const bool in_drawing = step[x] < drawing_limit(x);
        if (in_drawing != (step[y] < drawing_limit(y)))
          throw std::logic_error("curves " + pair_str(x, y) + " disagree on where they cross");
        if (in_drawing != drawing) continue;
        if (drawing) d.events.push_back(WiringEvent::swap(p));
        std::swap(order[p], order[p + 1]);
        ++step[x], ++step[y];
        progress = true;
      }
    }
    for (int i = 1; i <= n; ++i) {
      const int target = drawing ? drawing_limit(i) : length(i);
      if (step[i] != target)
        throw std::logic_error(std::string("local sequences stall in the ") +
                               (drawing ? "drawing" : "appended arrangement") + " at curve " +
                               std::to_string(i));
    }
  }
  for (int p = 0; p < n; ++p)
    if (order[p] != n - p) throw std::logic_error("completed arrangement does not end reversed");
  return d;
}

}  // namespace

Result<WiringDiagram> realize_k2(const Table2& t) {
  const Verdict v = check_k2(t);
  if (!v) return *v.witness;
  const TArrangement T = build_T_arrangement(rotation_from_table2(t).value());
  const LocalSequences ls = local_sequences(t, T);
  WiringDiagram d = schedule(ls);
  if (extract_table(d) != t) throw std::logic_error("realized diagram does not reproduce its table");
  return d;
}

}  // namespace outerdraw
