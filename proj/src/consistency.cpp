#include "outerdraw/consistency.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "outerdraw/rules.hpp"

namespace outerdraw {

Verdict check_k2(const Table2& t) {
  if (auto v = first_violation_2(t)) return Verdict::fail(*v);
  return Verdict::ok();
}

TableMap tables_from_projections(const Table2& t1, const Table2& t2, const Table2& t3) {
  if (t1.size() != t2.size() || t2.size() != t3.size())
    throw InputError("projection tables have different sizes");
  TableMap m;
  m.emplace(OuterPair{1, 2}, reverse_table(t3));
  m.emplace(OuterPair{1, 3}, t2);
  m.emplace(OuterPair{2, 3}, reverse_table(t1));
  return m;
}

Verdict check_k3(const Table2& t1, const Table2& t2, const Table2& t3) {
  return check_general(3, tables_from_projections(t1, t2, t3));
}

std::array<Table2, 3> projections(const K32Table& t) {
  std::array<Table2, 3> out{Table2(t.size(), PairType2::N), Table2(t.size(), PairType2::N),
                            Table2(t.size(), PairType2::N)};
  for (std::size_t idx = 0; idx < t.pair_count(); ++idx) {
    const K32Projection p = project_k32(t.entries()[idx]);
    out[0].entries()[idx] = p.t1;
    out[1].entries()[idx] = p.t2;
    out[2].entries()[idx] = p.t3;
  }
  return out;
}

Verdict check_k3(const K32Table& t) {
  const auto p = projections(t);
  return check_k3(p[0], p[1], p[2]);
}

namespace {

std::string outer_name(int i, int j) { return "(p" + std::to_string(i) + ",p" + std::to_string(j) + ")"; }

// Canonical (i<j) view of a table map; validates completeness.
std::vector<std::vector<const Table2*>> canonical_tables(int k, const TableMap& tables, int& n) {
  if (k < 2) throw InputError("need k >= 2");
  std::vector<std::vector<const Table2*>> by(static_cast<std::size_t>(k + 1),
                                             std::vector<const Table2*>(static_cast<std::size_t>(k + 1), nullptr));
  for (const auto& [key, t] : tables) {
    const auto [i, j] = key;
    if (i < 1 || j < 1 || i > k || j > k || i == j)
      throw InputError("table key " + outer_name(i, j) + " out of range for k=" + std::to_string(k));
    if (i < j) by[i][j] = &t;
  }
  n = -1;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      if (!by[i][j]) throw InputError("missing table for " + outer_name(i, j));
      if (n == -1) n = by[i][j]->size();
      if (by[i][j]->size() != n) throw InputError("table for " + outer_name(i, j) + " has wrong size");
    }
  for (const auto& [key, t] : tables) {
    const auto [i, j] = key;
    if (i > j && reverse_table(t) != *by[j][i])
      throw InputError("orientation mismatch: table for " + outer_name(i, j) +
                       " is not the reverse of " + outer_name(j, i));
  }
  return by;
}

std::optional<Violation> projection_violation(int k, int n,
                                              const std::vector<std::vector<const Table2*>>& by) {
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int c = b + 1; c <= k; ++c) {
        const Table2& ab = *by[a][b];
        const Table2& ac = *by[a][c];
        const Table2& bc = *by[b][c];
        for (std::size_t idx = 0; idx < ab.pair_count(); ++idx) {
          auto flip = [](PairType2 x) {
            return x == PairType2::A ? PairType2::B : x == PairType2::B ? PairType2::A : x;
          };
          if (!legal_k32(flip(bc.entries()[idx]), ac.entries()[idx], flip(ab.entries()[idx]))) {
            // Recover (u,v) from the pair index.
            for (int u = 1; u <= n; ++u)
              for (int v = u + 1; v <= n; ++v)
                if (pair_index(n, u, v) == idx) return Violation{"k32_projection", {a, b, c}, {u, v}};
          }
        }
      }
  return std::nullopt;
}

}  // namespace

Verdict check_general(int k, const TableMap& tables) {
  int n = 0;
  const auto by = canonical_tables(k, tables, n);
  if (k >= 3)
    if (auto v = projection_violation(k, n, by)) return Verdict::fail(*v);

  std::vector<Permutation> pi(static_cast<std::size_t>(k + 1));
  pi[1] = Permutation::identity(n);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const Table2& t = *by[i][j];
      if (auto v = first_violation_2(in_frame(t, pi[i]))) {
        for (int& x : v->inner) x = pi[i][x - 1];
        v->outer = {i, j};
        return Verdict::fail(*v);
      }
      if (i == 1) pi[j] = partner_rotation(t, pi[1]).value();
    }
  }
  return Verdict::ok();
}

Result<RotationSystem> rotations_from_tables(int k, const TableMap& tables) {
  int n = 0;
  const auto by = canonical_tables(k, tables, n);
  RotationSystem rs;
  rs.perms.push_back(Permutation::identity(n));
  for (int j = 2; j <= k; ++j) {
    auto r = partner_rotation(*by[1][j], rs.perms.front());
    if (!r) {
      Violation v = r.witness();
      v.outer = {1, j};
      return v;
    }
    rs.perms.push_back(r.value());
  }
  return rs;
}

Verdict realize_atgraph(const ATGraph& g) {
  g.validate();
  for (const auto& c : g.crossings) {
    const EdgeRef mirror_a{c.first.outer, c.second.inner};
    const EdgeRef mirror_b{c.second.outer, c.first.inner};
    if (g.crosses(mirror_a, mirror_b)) {
      const int u = std::min(c.first.inner, c.second.inner);
      const int v = std::max(c.first.inner, c.second.inner);
      return Verdict::fail({"double_crossing",
                            {std::min(c.first.outer, c.second.outer), std::max(c.first.outer, c.second.outer)},
                            {u, v}});
    }
  }
  const auto all = types_from_crossings(g);
  TableMap tables;
  for (const auto& [key, t] : all)
    if (key.first < key.second) tables.emplace(key, t);
  return check_general(g.k, tables);
}

// ---------------------------------------------------------------------------
// Backtracking search over rotation systems.

namespace {

class RotationSearch {
 public:
  explicit RotationSearch(const RotationSystem& rs) : rs_(rs), k_(rs.k()), n_(rs.n()) {
    for (int i = 1; i <= k_; ++i)
      for (int j = i + 1; j <= k_; ++j) outer_pairs_.push_back({i, j});
    tables_.assign(outer_pairs_.size(), Table2(n_, PairType2::N));
    const std::size_t npairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    assigned_.assign(npairs, false);
    candidates_.resize(npairs);
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v) candidates_[pair_index(n_, u, v)] = pair_candidates(u, v);
  }

  bool run() {
    std::vector<std::pair<int, int>> order;
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v) order.push_back({u, v});
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
      return candidates_[pair_index(n_, x.first, x.second)].size() <
             candidates_[pair_index(n_, y.first, y.second)].size();
    });
    order_ = std::move(order);
    return assign(0);
  }

  TableMap result() const {
    TableMap m;
    for (std::size_t o = 0; o < outer_pairs_.size(); ++o) m.emplace(outer_pairs_[o], tables_[o]);
    return m;
  }

 private:
  // Letter vectors over outer pairs that form a Table-1 column on every
  // outer triple.
  std::vector<std::vector<PairType2>> pair_candidates(int u, int v) const {
    std::vector<std::vector<PairType2>> out;
    const std::size_t m = outer_pairs_.size();
    std::vector<std::size_t> free;
    std::vector<PairType2> base(m, PairType2::N);
    for (std::size_t o = 0; o < m; ++o) {
      const auto [i, j] = outer_pairs_[o];
      if (rs_.perms[i - 1].before(u, v) == rs_.perms[j - 1].before(u, v)) free.push_back(o);
    }
    const std::size_t combos = std::size_t{1} << free.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::vector<PairType2> letters = base;
      for (std::size_t f = 0; f < free.size(); ++f)
        letters[free[f]] = (mask >> f) & 1 ? PairType2::B : PairType2::A;
      if (columns_ok(letters)) out.push_back(std::move(letters));
    }
    return out;
  }

  std::size_t outer_index(int i, int j) const {
    // lexicographic index of (i,j), i<j, among pairs of [k]
    return pair_index(k_, i, j);
  }

  bool columns_ok(const std::vector<PairType2>& letters) const {
    auto flip = [](PairType2 x) { return x == PairType2::A ? PairType2::B : x == PairType2::B ? PairType2::A : x; };
    for (int a = 1; a <= k_; ++a)
      for (int b = a + 1; b <= k_; ++b)
        for (int c = b + 1; c <= k_; ++c)
          if (!legal_k32(flip(letters[outer_index(b, c)]), letters[outer_index(a, c)],
                         flip(letters[outer_index(a, b)])))
            return false;
    return true;
  }

  bool is_assigned(int u, int v) const { return assigned_[pair_index(n_, u, v)]; }

  bool locally_consistent(int u, int v) const {
    for (std::size_t o = 0; o < outer_pairs_.size(); ++o) {
      const Table2& t = tables_[o];
      const Permutation& frame = rs_.perms[outer_pairs_[o].first - 1];
      auto sorted = [&](std::array<int, 4> xs, int len) {
        std::sort(xs.begin(), xs.begin() + len, [&](int p, int q) { return frame.before(p, q); });
        return xs;
      };
      for (int w = 1; w <= n_; ++w) {
        if (w == u || w == v || !is_assigned(u, w) || !is_assigned(v, w)) continue;
        const auto s = sorted({u, v, w, 0}, 3);
        if (!legal_triple_2(t.at(s[0], s[1]), t.at(s[0], s[2]), t.at(s[1], s[2]))) return false;
      }
      for (int w = 1; w <= n_; ++w) {
        if (w == u || w == v || !is_assigned(u, w) || !is_assigned(v, w)) continue;
        for (int x = w + 1; x <= n_; ++x) {
          if (x == u || x == v || !is_assigned(u, x) || !is_assigned(v, x) || !is_assigned(w, x)) continue;
          const auto s = sorted({u, v, w, x}, 4);
          if (!quad_2_ok(t, s[0], s[1], s[2], s[3])) return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto [u, v] = order_[depth];
    const std::size_t idx = pair_index(n_, u, v);
    assigned_[idx] = true;
    for (const auto& letters : candidates_[idx]) {
      for (std::size_t o = 0; o < tables_.size(); ++o) tables_[o].at(u, v) = letters[o];
      if (locally_consistent(u, v) && assign(depth + 1)) return true;
    }
    assigned_[idx] = false;
    return false;
  }

  const RotationSystem& rs_;
  int k_;
  int n_;
  std::vector<OuterPair> outer_pairs_;
  std::vector<Table2> tables_;
  std::vector<bool> assigned_;
  std::vector<std::vector<std::vector<PairType2>>> candidates_;
  std::vector<std::pair<int, int>> order_;
};

RotationSystem restrict_rotations(const RotationSystem& rs, std::span<const int> labels) {
  RotationSystem out;
  for (const auto& p : rs.perms) out.perms.push_back(p.restrict(labels));
  return out;
}

}  // namespace

std::optional<TableMap> search_rotation(const RotationSystem& rs) {
  rs.validate();
  if (rs.n() < 2) {
    TableMap m;
    for (int i = 1; i <= rs.k(); ++i)
      for (int j = i + 1; j <= rs.k(); ++j) m.emplace(OuterPair{i, j}, Table2(std::max(rs.n(), 1), PairType2::N));
    return m;
  }
  // relabel so that pi_1 is the identity
  const Permutation to_rank = rs.perms.front().inverse();
  RotationSystem normalized;
  for (const auto& p : rs.perms) normalized.perms.push_back(to_rank.compose(p));
  RotationSearch search(normalized);
  if (!search.run()) return std::nullopt;
  return search.result();
}

std::optional<K32Table> search_rotation_k3(const Permutation& p1, const Permutation& p2,
                                           const Permutation& p3) {
  const RotationSystem rs{{p1, p2, p3}};
  auto found = search_rotation(rs);
  if (!found) return std::nullopt;
  const int n = p1.size();
  K32Table out(n, K32Type::B1);
  const TableMap& m = *found;
  const Table2& t1 = reverse_table(m.at({2, 3}));
  const Table2& t2 = m.at({1, 3});
  const Table2& t3 = reverse_table(m.at({1, 2}));
  for (std::size_t idx = 0; idx < out.pair_count(); ++idx) {
    auto type = legal_k32(t1.entries()[idx], t2.entries()[idx], t3.entries()[idx]);
    if (!type) throw std::logic_error("search produced a non-column pair");
    out.entries()[idx] = *type;
  }
  return out;
}

std::vector<int> minimal_infeasible_subset(const RotationSystem& rs) {
  if (search_rotation(rs)) return {};
  std::vector<int> keep(static_cast<std::size_t>(rs.n()));
  std::iota(keep.begin(), keep.end(), 1);
  for (int v = 1; v <= rs.n(); ++v) {
    std::vector<int> trial;
    for (int x : keep)
      if (x != v) trial.push_back(x);
    if (trial.size() >= 2 && !search_rotation(restrict_rotations(rs, trial))) keep = std::move(trial);
  }
  return keep;
}

}  // namespace outerdraw
