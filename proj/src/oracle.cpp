#include "outerdraw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace outerdraw {

namespace {

void check_guard(int n, int guard, const char* what) {
  if (n < 1) throw InputError(std::string(what) + " needs n >= 1");
  if (n > guard)
    throw InputError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(guard) + " (raise it explicitly)");
}

struct DrawingSearch {
  int n;
  std::set<Table2> found;
  std::unordered_set<std::string> seen;

  void run(unsigned mask, Table2& t) {
    std::string key(t.pair_count() + 1, '\0');
    key[0] = static_cast<char>(mask);
    for (std::size_t i = 0; i < t.pair_count(); ++i) key[i + 1] = static_cast<char>(t.entries()[i]);
    if (!seen.insert(std::move(key)).second) return;
    const unsigned full = (1u << n) - 1;
    if (mask == full) {
      found.insert(t);
      return;
    }
    auto fired = [&](int c) { return (mask >> (c - 1)) & 1u; };
    // current top-to-bottom order: u is below every v < u it has swapped with
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int u = 1; u <= n; ++u) {
      int pos = 0;
      for (int v = 1; v <= n; ++v) {
        if (v == u) continue;
        const bool swapped = t.at(u, v) != PairType2::N;
        if ((v < u) != swapped) ++pos;
      }
      order[pos] = u;
    }
    for (int c = 1; c <= n; ++c)
      if (!fired(c)) run(mask | (1u << (c - 1)), t);
    for (int p = 0; p + 1 < n; ++p) {
      const int x = order[p], y = order[p + 1];
      if (fired(x) == fired(y)) continue;
      const int u = std::min(x, y), v = std::max(x, y);
      if (t.at(u, v) != PairType2::N) continue;
      t.at(u, v) = fired(u) ? PairType2::B : PairType2::A;
      run(mask, t);
      t.at(u, v) = PairType2::N;
    }
  }
};

}  // namespace

std::set<Table2> enumerate_drawings_k2(int n, int guard) {
  check_guard(n, guard, "enumerate_drawings_k2");
  if (n > 30) throw InputError("enumerate_drawings_k2: n too large");
  DrawingSearch s{n, {}, {}};
  Table2 t(n, PairType2::N);
  s.run(0, t);
  return std::move(s.found);
}

std::vector<std::vector<Permutation>> enumerate_allowable(int n, int guard) {
  check_guard(n, guard, "enumerate_allowable");
  std::vector<std::vector<Permutation>> out;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<Permutation> path{Permutation(order)};
  const int steps = n * (n - 1) / 2;
  std::function<void()> dfs = [&]() {
    if (static_cast<int>(path.size()) == steps + 1) {
      out.push_back(path);
      return;
    }
    for (int p = 0; p + 1 < n; ++p) {
      if (order[p] > order[p + 1]) continue;
      std::swap(order[p], order[p + 1]);
      path.emplace_back(order);
      dfs();
      path.pop_back();
      std::swap(order[p], order[p + 1]);
    }
  };
  dfs();
  return out;
}

bool is_suballowable_bruteforce(const std::vector<Permutation>& perms, int guard) {
  if (perms.empty()) return true;
  const int n = perms.front().size();
  for (const auto& p : perms)
    if (p.size() != n) throw InputError("suballowable query mixes ground sets");
  check_guard(n, guard, "is_suballowable_bruteforce");
  // Relabel so the query starts at the identity; the sequence can then be
  // rotated to start there too.
  std::vector<Permutation> query;
  for (const auto& p : perms) {
    std::vector<int> w;
    for (int label : p.word()) w.push_back(perms.front().position(label) + 1);
    query.emplace_back(std::move(w));
  }
  for (const auto& half : enumerate_allowable(n, guard)) {
    const int m = static_cast<int>(half.size()) - 1;
    auto at = [&](int idx) { return idx <= m ? half[idx] : half[idx - m].reversed(); };
    int idx = 0;
    bool ok = true;
    for (const auto& q : query) {
      while (idx <= 2 * m && at(idx) != q) ++idx;
      if (idx > 2 * m) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::optional<Permutation> order_by_functional(const std::vector<Point>& pts, const Rational& a,
                                              const Rational& b) {
  std::vector<std::pair<Rational, int>> vals;
  for (std::size_t i = 0; i < pts.size(); ++i)
    vals.emplace_back(a * pts[i].x + b * pts[i].y, static_cast<int>(i + 1));
  std::sort(vals.begin(), vals.end());
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i].first == vals[i - 1].first) return std::nullopt;
  std::vector<int> w;
  for (const auto& [v, label] : vals) w.push_back(label);
  return Permutation(std::move(w));
}

PointsetInstance random_pointset_rotations(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_pointset_rotations needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (;;) {
    PointsetInstance inst;
    for (int i = 0; i < n; ++i) inst.points.push_back({Rational(coord(rng)), Rational(coord(rng))});
    const auto p1 = order_by_functional(inst.points, 1, -1);
    const auto p2 = order_by_functional(inst.points, -1, 0);
    const auto p3 = order_by_functional(inst.points, 0, 1);
    if (!p1 || !p2 || !p3) continue;
    inst.rotations.perms = {*p1, *p2, *p3};
    return inst;
  }
}

namespace {

long cross(std::pair<long, long> a, std::pair<long, long> b) { return a.first * b.second - a.second * b.first; }

int sign(long v) { return (v > 0) - (v < 0); }

}  // namespace

RayDrawing random_ray_drawing(int k, int n, std::uint64_t seed) {
  if (k < 2 || n < 1) throw InputError("random_ray_drawing needs k >= 2 and n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dir(-20, 20);
  std::uniform_int_distribution<long> coord(-500, 500);
  for (;;) {
    std::vector<std::pair<long, long>> dirs;
    while (static_cast<int>(dirs.size()) < k) {
      std::pair<long, long> d{dir(rng), dir(rng)};
      if (d.first == 0 && d.second == 0) continue;
      if (std::any_of(dirs.begin(), dirs.end(), [&](auto e) { return cross(e, d) == 0; })) continue;
      dirs.push_back(d);
    }
    // clockwise = decreasing angle, starting from the first direction drawn
    const double a0 = std::atan2(static_cast<double>(dirs[0].second), static_cast<double>(dirs[0].first));
    auto cw_offset = [&](std::pair<long, long> d) {
      double off = a0 - std::atan2(static_cast<double>(d.second), static_cast<double>(d.first));
      while (off < 0) off += 2 * std::numbers::pi;
      return off;
    };
    std::sort(dirs.begin(), dirs.end(), [&](auto a, auto b) { return cw_offset(a) < cw_offset(b); });

    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
    auto f = [&](std::size_t d, std::size_t v) {
      return dirs[d].second * pts[v].first - dirs[d].first * pts[v].second;
    };
    bool generic = true;
    std::vector<std::vector<int>> orders;
    for (std::size_t d = 0; d < dirs.size() && generic; ++d) {
      std::vector<int> idx(static_cast<std::size_t>(n));
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f(d, a) < f(d, b); });
      for (int r = 1; r < n && generic; ++r) generic = f(d, idx[r]) != f(d, idx[r - 1]);
      orders.push_back(idx);
    }
    if (!generic) continue;
    // relabel: the r-th point in the order at p_1 becomes r+1
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) label[orders[0][r]] = r + 1;

    RayDrawing out;
    out.directions = dirs;
    out.points.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.points[label[v] - 1] = {Rational(pts[v].first), Rational(pts[v].second)};
    for (const auto& ord : orders) {
      std::vector<int> w;
      for (int v : ord) w.push_back(label[v]);
      out.rotations.perms.emplace_back(std::move(w));
    }
    out.graph = ATGraph{k, n, {}};
    for (int i = 0; i < k && generic; ++i)
      for (int j = 0; j < k && generic; ++j) {
        if (i == j) continue;
        const long det = cross(dirs[i], dirs[j]);
        for (int u = 0; u < n && generic; ++u)
          for (int v = 0; v < n && generic; ++v) {
            if (u == v) continue;
            const std::pair<long, long> w{pts[v].first - pts[u].first, pts[v].second - pts[u].second};
            const int s = sign(cross(w, dirs[j])) * sign(det);
            const int t = sign(cross(w, dirs[i])) * sign(det);
            if (s == 0 || t == 0) generic = false;
            if (s > 0 && t > 0)
              out.graph.crossings.insert(Crossing::make({i + 1, label[u]}, {j + 1, label[v]}));
          }
      }
    if (generic) return out;
  }
}

}  // namespace outerdraw
