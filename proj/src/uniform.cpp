#include "outerdraw/uniform.hpp"

#include <map>

namespace outerdraw {

DecompositionTree DecompositionTree::leaf(int vertex) {
  DecompositionTree t;
  t.vertex_ = vertex;
  return t;
}

DecompositionTree DecompositionTree::node(DecompositionTree left, DecompositionTree right, int label) {
  DecompositionTree t;
  t.label_ = label;
  t.left_ = std::make_shared<const DecompositionTree>(std::move(left));
  t.right_ = std::make_shared<const DecompositionTree>(std::move(right));
  return t;
}

bool DecompositionTree::valid() const {
  int next = 1;
  std::function<bool(const DecompositionTree&)> walk = [&](const DecompositionTree& t) {
    if (t.is_leaf()) return t.vertex() == next++;
    if (t.label() < 1) return false;
    if (!t.left().is_leaf() && t.left().label() == t.label()) return false;
    return walk(t.left()) && walk(t.right());
  };
  return walk(*this);
}

std::string DecompositionTree::to_string() const {
  if (is_leaf()) return std::to_string(vertex_);
  return "(" + left_->to_string() + "," + right_->to_string() + ")_" + std::to_string(label_);
}

bool DecompositionTree::operator==(const DecompositionTree& o) const {
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return vertex_ == o.vertex_;
  return label_ == o.label_ && *left_ == *o.left_ && *right_ == *o.right_;
}

namespace {

std::optional<DecompositionTree> decompose_range(const UniformTable& t, int lo, int hi) {
  if (lo == hi) return DecompositionTree::leaf(lo);
  for (int s = lo + 1; s <= hi; ++s) {
    const int x = t.at(lo, s);
    bool constant = true;
    for (int a = lo; a < s && constant; ++a)
      for (int b = s; b <= hi && constant; ++b) constant = t.at(a, b) == x;
    if (!constant) continue;
    auto left = decompose_range(t, lo, s - 1);
    if (!left) return std::nullopt;
    auto right = decompose_range(t, s, hi);
    if (!right) return std::nullopt;
    return DecompositionTree::node(std::move(*left), std::move(*right), x);
  }
  return std::nullopt;
}

void fill_table(const DecompositionTree& tr, UniformTable& out) {
  if (tr.is_leaf()) return;
  for (int a = tr.left().first_leaf(); a <= tr.left().last_leaf(); ++a)
    for (int b = tr.right().first_leaf(); b <= tr.right().last_leaf(); ++b) out.at(a, b) = tr.label();
  fill_table(tr.left(), out);
  fill_table(tr.right(), out);
}

// Trees on the leaves lo..hi; `forbidden` is the parent's label when this
// subtree is a left child (0 otherwise).
bool generate(int k, int lo, int hi, int forbidden,
              const std::function<bool(const DecompositionTree&)>& visit) {
  if (lo == hi) return visit(DecompositionTree::leaf(lo));
  for (int s = lo + 1; s <= hi; ++s) {
    for (int x = 1; x <= k; ++x) {
      if (x == forbidden) continue;
      const bool keep_going = generate(k, lo, s - 1, x, [&](const DecompositionTree& left) {
        return generate(k, s, hi, 0, [&](const DecompositionTree& right) {
          return visit(DecompositionTree::node(left, right, x));
        });
      });
      if (!keep_going) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<DecompositionTree> decompose_uniform(const UniformTable& t) {
  return decompose_range(t, 1, t.size());
}

UniformTable tree_to_table(const DecompositionTree& tree) {
  UniformTable out(tree.last_leaf(), 0);
  fill_table(tree, out);
  return out;
}

BigInt count_uniform(int k, int n) {
  if (k < 1 || n < 1) throw InputError("count_uniform needs k,n >= 1");
  std::vector<BigInt> t(static_cast<std::size_t>(n + 1));
  t[1] = 1;
  for (int m = 2; m <= n; ++m) {
    BigInt sum = 0;
    for (int i = 1; i < m; ++i) sum += t[i] * t[m - i];
    t[m] = t[m - 1] + BigInt(k - 1) * sum;
  }
  return t[n];
}

BigInt catalan(int j) { return binomial(2 * j, j) / (j + 1); }

BigInt count_uniform_closed(int k, int n) {
  if (k < 1 || n < 1) throw InputError("count_uniform_closed needs k,n >= 1");
  const int m = n - 1;
  const BigInt kappa = k - 1;
  BigInt sum = 0;
  BigInt power = 1;
  for (int j = 0; j <= m; ++j) {
    sum += binomial(m + j, 2 * j) * catalan(j) * power;
    power *= kappa;
  }
  return sum;
}

void for_each_uniform_tree(int k, int n, const std::function<bool(const DecompositionTree&)>& visit) {
  if (k < 1 || n < 1) throw InputError("enumerate_uniform needs k,n >= 1");
  generate(k, 1, n, 0, visit);
}

std::vector<DecompositionTree> enumerate_uniform(int k, int n) {
  std::vector<DecompositionTree> out;
  for_each_uniform_tree(k, n, [&](const DecompositionTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

TableMap uniform_to_tables(int k, const UniformTable& t) {
  TableMap m;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      Table2 out(t.size(), PairType2::N);
      for (std::size_t idx = 0; idx < t.pair_count(); ++idx) {
        const int q = t.entries()[idx];
        out.entries()[idx] = (i <= q && q < j) ? PairType2::A : PairType2::B;
      }
      m.emplace(OuterPair{i, j}, std::move(out));
    }
  return m;
}

}  // namespace outerdraw
