#include "outerdraw/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace outerdraw {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)), pos_(word_.size(), -1) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const int label = word_[i];
    if (label < 1 || label > n)
      throw InputError("permutation entry " + std::to_string(label) + " outside 1.." +
                       std::to_string(n));
    if (pos_[label - 1] != -1)
      throw InputError("permutation repeats " + std::to_string(label));
    pos_[label - 1] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) { return identity(n).reversed(); }

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(word_.rbegin(), word_.rend()));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InputError("composing permutations of different size");
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[i] = word_[other.word_[i] - 1];
  return Permutation(std::move(w));
}

Permutation Permutation::restrict(std::span<const int> labels) const {
  std::vector<int> rank(word_.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) rank[labels[i] - 1] = static_cast<int>(i + 1);
  std::vector<int> w;
  w.reserve(labels.size());
  for (int label : word_)
    if (rank[label - 1] != 0) w.push_back(rank[label - 1]);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s + "]";
}

void RotationSystem::validate() const {
  if (k() < 2) throw InputError("a rotation system needs k >= 2 outer vertices");
  for (const auto& p : perms)
    if (p.size() != n()) throw InputError("rotations act on different ground sets");
}

char to_char(PairType2 t) {
  switch (t) {
    case PairType2::A: return 'A';
    case PairType2::B: return 'B';
    case PairType2::N: return 'N';
  }
  return '?';
}

std::string to_string(K32Type t) {
  static const char* names[] = {"B1", "B2", "B3", "W1", "W2", "W3"};
  return names[static_cast<int>(t)];
}

PairType2 pair_type2_from_char(char c) {
  switch (c) {
    case 'A': return PairType2::A;
    case 'B': return PairType2::B;
    case 'N': return PairType2::N;
    default: throw InputError(std::string("unknown pair type '") + c + "'");
  }
}

K32Type k32_type_from_string(const std::string& s) {
  for (K32Type t : kAllK32Types)
    if (to_string(t) == s) return t;
  throw InputError("unknown K_{3,2} type '" + s + "'");
}

Crossing Crossing::make(EdgeRef a, EdgeRef b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

namespace {

std::string edge_str(EdgeRef e) {
  return "(p" + std::to_string(e.outer) + "," + std::to_string(e.inner) + ")";
}

}  // namespace

void ATGraph::validate() const {
  if (k < 2) throw InputError("AT-graph needs k >= 2");
  if (n < 1) throw InputError("AT-graph needs n >= 1");
  for (const auto& c : crossings) {
    for (EdgeRef e : {c.first, c.second})
      if (e.outer < 1 || e.outer > k || e.inner < 1 || e.inner > n)
        throw InputError("edge " + edge_str(e) + " is not an edge of K_{" + std::to_string(k) +
                         "," + std::to_string(n) + "}");
    const std::string pair = edge_str(c.first) + " x " + edge_str(c.second);
    if (c.first.outer == c.second.outer)
      throw InputError("crossing " + pair + " joins two edges of the same outer star");
    if (c.first.inner == c.second.inner)
      throw InputError("crossing " + pair + " joins two edges sharing an inner vertex");
  }
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << rule;
  if (!outer.empty()) {
    os << " outer(";
    for (std::size_t i = 0; i < outer.size(); ++i) os << (i ? "," : "") << "p" << outer[i];
    os << ")";
  }
  if (!inner.empty()) {
    os << " inner(";
    for (std::size_t i = 0; i < inner.size(); ++i) os << (i ? "," : "") << inner[i];
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Does the pair {u<v} have its p_i-edges in the order (u, v) at p_i?
bool first_is_smaller(const ATGraph& g, int i, int u, int v) {
  if (i == 1) return true;
  const bool crossed = g.crosses({1, u}, {i, v}) || g.crosses({1, v}, {i, u});
  return crossed;
}

}  // namespace

std::map<OuterPair, Table2> types_from_crossings(const ATGraph& g) {
  g.validate();
  std::map<OuterPair, Table2> out;
  for (int i = 1; i <= g.k; ++i) {
    for (int j = 1; j <= g.k; ++j) {
      if (i == j) continue;
      Table2 t(g.n, PairType2::N);
      for (int u = 1; u <= g.n; ++u) {
        for (int v = u + 1; v <= g.n; ++v) {
          const int a = first_is_smaller(g, i, u, v) ? u : v;
          const int b = a == u ? v : u;
          const bool type_a = g.crosses({i, a}, {j, b});
          const bool type_b = g.crosses({j, a}, {i, b});
          if (type_a && type_b)
            throw InputError("pair {" + std::to_string(u) + "," + std::to_string(v) +
                             "} crosses twice between p" + std::to_string(i) + " and p" +
                             std::to_string(j));
          t.at(u, v) = type_a ? PairType2::A : type_b ? PairType2::B : PairType2::N;
        }
      }
      out.emplace(OuterPair{i, j}, std::move(t));
    }
  }
  return out;
}

ATGraph crossings_from_types(const std::map<OuterPair, Table2>& tables, int k, int n) {
  if (k < 2 || n < 1) throw InputError("crossings_from_types needs k >= 2 and n >= 1");
  auto lookup = [&](int i, int j) -> const Table2& {
    auto it = tables.find({i, j});
    if (it == tables.end())
      throw InputError("missing table for (p" + std::to_string(i) + ",p" + std::to_string(j) + ")");
    if (it->second.size() != n)
      throw InputError("table for (p" + std::to_string(i) + ",p" + std::to_string(j) +
                       ") has wrong size");
    return it->second;
  };
  for (const auto& [key, t] : tables) {
    const auto [i, j] = key;
    if (i < 1 || j < 1 || i > k || j > k || i == j)
      throw InputError("table key (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
    if (i > j && reverse_table(t) != lookup(j, i))
      throw InputError("table for (p" + std::to_string(i) + ",p" + std::to_string(j) +
                       ") contradicts its reverse");
  }
  ATGraph g{k, n, {}};
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const Table2& t = lookup(i, j);
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
          const PairType2 type = t.at(u, v);
          if (type == PairType2::N) continue;
          const bool u_first = i == 1 || lookup(1, i).at(u, v) != PairType2::N;
          const int a = u_first ? u : v;
          const int b = u_first ? v : u;
          if (type == PairType2::A)
            g.crossings.insert(Crossing::make({i, a}, {j, b}));
          else
            g.crossings.insert(Crossing::make({j, a}, {i, b}));
        }
      }
    }
  }
  return g;
}

Table2 reverse_table(const Table2& t) {
  Table2 out = t;
  for (auto& e : out.entries()) {
    if (e == PairType2::A)
      e = PairType2::B;
    else if (e == PairType2::B)
      e = PairType2::A;
  }
  return out;
}

Result<Permutation> rotation_from_table2(const Table2& t) {
  const int n = t.size();
  auto is_n = [&](int a, int b) { return t.at(a, b) == PairType2::N; };
  // Both the N-pairs (non-inversions) and the other pairs (inversions) must
  // be transitive relations on a < b < c.
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const bool x = is_n(a, b), y = is_n(a, c), z = is_n(b, c);
        if ((x && z && !y) || (!x && !z && y)) return Violation{"intransitive_rotation", {}, {a, b, c}};
      }
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int u = 1; u <= n; ++u) {
    int pos = 0;
    for (int v = 1; v <= n; ++v) {
      if (v == u) continue;
      const bool v_before = v < u ? is_n(v, u) : !is_n(u, v);
      pos += v_before ? 1 : 0;
    }
    word[pos] = u;
  }
  return Permutation(std::move(word));
}

Table2 in_frame(const Table2& t, const Permutation& order) {
  if (order.size() != t.size()) throw InputError("frame permutation has wrong size");
  return t.restrict(order.word());
}

Result<Permutation> partner_rotation(const Table2& t, const Permutation& left_ccw) {
  Result<Permutation> sweep = rotation_from_table2(in_frame(t, left_ccw));
  if (!sweep) {
    Violation v = sweep.witness();
    for (int& x : v.inner) x = left_ccw[x - 1];
    std::sort(v.inner.begin(), v.inner.end());
    return v;
  }
  const Permutation ccw_frame = sweep.value().reversed();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.size()));
  for (int r : ccw_frame.word()) word.push_back(left_ccw[r - 1]);
  return Permutation(std::move(word));
}

K32Projection project_k32(K32Type t) {
  using enum PairType2;
  switch (t) {
    case K32Type::B1: return {B, A, A};
    case K32Type::B2: return {A, B, A};
    case K32Type::B3: return {A, A, B};
    case K32Type::W1: return {A, N, N};
    case K32Type::W2: return {N, A, N};
    case K32Type::W3: return {N, N, A};
  }
  throw std::logic_error("bad K32Type");
}

std::optional<K32Type> legal_k32(PairType2 t1, PairType2 t2, PairType2 t3) {
  const K32Projection p{t1, t2, t3};
  for (K32Type t : kAllK32Types)
    if (project_k32(t) == p) return t;
  return std::nullopt;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt min_crossing_value(int k, int n) {
  if (k < 1 || n < 1) throw InputError("min_crossing_value needs k,n >= 1");
  const BigInt per_pair = binomial(k, 2) - BigInt(k / 2) * BigInt((k + 1) / 2);
  return binomial(n, 2) * per_pair;
}

RotationSystem min_crossing_rotation(int k, int n) {
  if (k < 1 || n < 1) throw InputError("min_crossing_rotation needs k,n >= 1");
  RotationSystem rs;
  for (int i = 0; i < k; ++i)
    rs.perms.push_back(i < k / 2 ? Permutation::identity(n) : Permutation::reversal(n));
  return rs;
}

std::size_t crossing_count(const Table2& t) {
  return static_cast<std::size_t>(
      std::count_if(t.entries().begin(), t.entries().end(), [](PairType2 x) { return x != PairType2::N; }));
}

std::size_t crossing_count(K32Type t) {
  const auto p = project_k32(t);
  std::size_t c = 0;
  for (PairType2 x : {p.t1, p.t2, p.t3}) c += x != PairType2::N ? 1 : 0;
  return c;
}

}  // namespace outerdraw
