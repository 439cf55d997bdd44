#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyckstat/dyck.hpp"

namespace dyckstat {

/// Unlabeled rooted tree with ordered children. Two trees are equal iff they
/// have the same shape, i.e. the same Dyck word under the preorder map.
class OrderedTree {
 public:
  /// A single vertex (no edges).
  OrderedTree() = default;
  explicit OrderedTree(std::vector<OrderedTree> children) : children_(std::move(children)) {}

  const std::vector<OrderedTree>& children() const& noexcept { return children_; }
  std::vector<OrderedTree> children() && noexcept { return std::move(children_); }
  bool is_leaf() const noexcept { return children_.empty(); }

  std::size_t edge_count() const noexcept;
  std::size_t leaf_count() const noexcept;
  /// Highest edge level; 0 for the single-vertex tree.
  int height() const noexcept;

  friend bool operator==(const OrderedTree&, const OrderedTree&) = default;

 private:
  std::vector<OrderedTree> children_;
};

/// An ordered tree whose root has exactly one child. The root edge is the
/// planting stalk.
class PlantedTree {
 public:
  /// Throws Error{NotPlanted} unless the root has exactly one child.
  explicit PlantedTree(OrderedTree tree);
  /// Plants `below` under a new root: the stalk leads to the root of `below`.
  static PlantedTree stalk_over(OrderedTree below);

  const OrderedTree& tree() const noexcept { return tree_; }
  /// Subtree hanging from the lower end of the planting stalk.
  const OrderedTree& top() const noexcept { return tree_.children().front(); }
  std::size_t edge_count() const noexcept { return tree_.edge_count(); }

  friend bool operator==(const PlantedTree&, const PlantedTree&) = default;

 private:
  OrderedTree tree_;
};

/// Edge identified by the preorder indices of its endpoints (root = 0).
struct EdgeRef {
  std::size_t parent = 0;
  std::size_t child = 0;
  int level = 0;

  bool red() const noexcept { return level % 3 == 0; }
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

OrderedTree path_to_tree(const DyckPath& p);
DyckPath tree_to_path(const OrderedTree& t);

std::string render_word(const OrderedTree& t);
/// One vertex per line, two spaces of indent per level, "*" for the root.
std::string render_outline(const OrderedTree& t);

/// All edges in preorder.
std::vector<EdgeRef> edges(const OrderedTree& t);
/// Edges whose pendant planted subtree has at least two leaves.
std::vector<EdgeRef> exterior_edges(const OrderedTree& t);
int edges_at_residue(const OrderedTree& t, const ResidueSpec& spec);
int red_edge_count(const OrderedTree& t);

/// Splits at the root, one planted tree per root child, in child order.
std::vector<PlantedTree> decompose_planted(const OrderedTree& t);
/// Glues the roots together in list order.
OrderedTree merge_planted(const std::vector<PlantedTree>& parts);

/// Throws Error{NonPositiveSize} for k < 1.
PlantedTree make_bouquet(int k);
PlantedTree make_path_tree(int k);
bool is_bouquet(const OrderedTree& t);
/// Every vertex has at most one child.
bool is_path_tree(const OrderedTree& t);

}  // namespace dyckstat
