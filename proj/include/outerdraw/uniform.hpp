#pragma once

// Outer drawings with a uniform rotation system: every pair of inner
// vertices gets a type in [k]. Consistent tables are exactly the ones with a
// recursive block decomposition, encoded by a labelled binary tree.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "outerdraw/core.hpp"

namespace outerdraw {

class DecompositionTree {
 public:
  static DecompositionTree leaf(int vertex);
  static DecompositionTree node(DecompositionTree left, DecompositionTree right, int label);

  bool is_leaf() const { return !left_; }
  int vertex() const { return vertex_; }
  int label() const { return label_; }
  const DecompositionTree& left() const { return *left_; }
  const DecompositionTree& right() const { return *right_; }

  int first_leaf() const { return is_leaf() ? vertex_ : left_->first_leaf(); }
  int last_leaf() const { return is_leaf() ? vertex_ : right_->last_leaf(); }
  int leaf_count() const { return is_leaf() ? 1 : left_->leaf_count() + right_->leaf_count(); }

  /// Leaves spell 1..n left to right and no internal node shares its
  /// label with an internal left child.
  bool valid() const;

  /// "(1,((2,3)_2,4)_1)_2"
  std::string to_string() const;

  bool operator==(const DecompositionTree& o) const;

 private:
  int vertex_ = 0;
  int label_ = 0;
  std::shared_ptr<const DecompositionTree> left_;
  std::shared_ptr<const DecompositionTree> right_;
};

/// Canonical tree (smallest split at every level), or nullopt if the table
/// has no decomposition.
std::optional<DecompositionTree> decompose_uniform(const UniformTable& t);

/// t(a,b) = label of the lowest common ancestor of leaves a and b.
UniformTable tree_to_table(const DecompositionTree& tree);

/// T(k,n) by the recursion T(k,n) = T(k,n-1) + (k-1) sum_i T(k,i) T(k,n-i).
BigInt count_uniform(int k, int n);
/// Closed form sum_j C(m+j,2j) C_j kappa^j with m = n-1, kappa = k-1.
BigInt count_uniform_closed(int k, int n);
BigInt catalan(int j);

/// Calls `visit` on every valid tree with n leaves and labels in [k]; stops
/// early when `visit` returns false.
void for_each_uniform_tree(int k, int n, const std::function<bool(const DecompositionTree&)>& visit);
std::vector<DecompositionTree> enumerate_uniform(int k, int n);

/// Pair tables (i<j) of a uniform drawing: a type q in [k] gives
/// T_ij = A if i <= q < j and B otherwise.
TableMap uniform_to_tables(int k, const UniformTable& t);

}  // namespace outerdraw
