#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/permutation.hpp"

namespace tangle {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

/// Ordered rooted tree whose leaves carry the labels 1..n exactly once.
///
/// Nodes live in an arena indexed by NodeId. Children are ordered; every internal
/// node has at least two of them. Immutable once constructed.
class RootedTree {
 public:
  struct Node {
    std::vector<NodeId> children;
    int label = 0;  // leaf label, 0 for internal nodes
  };

  /// Validates shape and labels. Throws Error(invalid_argument) for a malformed arena
  /// and Error(label_set_error) when the leaf labels are not exactly [n].
  RootedTree(std::vector<Node> nodes, NodeId root);

  NodeId root() const noexcept { return root_; }
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  int leaf_count() const noexcept { return static_cast<int>(leaf_node_.size()) - 1; }

  bool is_leaf(NodeId v) const { return node(v).children.empty(); }
  int label(NodeId v) const { return node(v).label; }
  NodeId parent(NodeId v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const NodeId> children(NodeId v) const { return node(v).children; }
  int depth(NodeId v) const { return depth_[static_cast<std::size_t>(v)]; }

  /// Node carrying leaf label `label`.
  NodeId leaf_node(int label) const { return leaf_node_[static_cast<std::size_t>(label)]; }

  /// Every internal node has exactly two children.
  bool is_binary() const noexcept { return binary_; }
  /// Binary with every leaf at the same depth.
  bool is_complete_binary() const noexcept;

  NodeId lca(NodeId a, NodeId b) const;

  /// Children before parents; siblings in child order.
  std::vector<NodeId> postorder() const;
  std::vector<NodeId> preorder() const;

  /// Leaf labels of T(v), left to right in the current child order.
  std::vector<int> leaves_under(NodeId v) const;

 private:
  const Node& node(NodeId v) const { return nodes_[static_cast<std::size_t>(v)]; }

  std::vector<Node> nodes_;
  NodeId root_;
  std::vector<NodeId> parent_;
  std::vector<int> depth_;
  std::vector<NodeId> leaf_node_;
  bool binary_ = true;
};

/// Incremental construction: create leaves, then internal nodes over them.
class TreeBuilder {
 public:
  NodeId leaf(int label);
  NodeId internal(std::vector<NodeId> children);
  RootedTree build(NodeId root) &&;

 private:
  std::vector<RootedTree::Node> nodes_;
};

/// Newick subset: `tree := subtree ";"`, `subtree := leaf | "(" subtree ("," subtree)+ ")"`,
/// leaves are decimal integers >= 1. Whitespace between tokens is ignored.
/// Throws ParseError(syntax_error) with the byte offset, or Error(label_set_error).
RootedTree parse_tree(std::string_view text);

std::string serialize(const RootedTree& t);

/// Leaves left to right in the stored child order.
Permutation current_leaf_order(const RootedTree& t);

/// pi in Pi(t): every subtree's leaves occupy a contiguous run of pi.
/// Throws Error(length_mismatch) when |pi| differs from the leaf count.
bool is_consistent(const RootedTree& t, const Permutation& pi);

/// Same tree with children reordered so that its current leaf order is `pi`.
/// Throws Error(invalid_argument) when pi is not in Pi(t).
RootedTree reorder_to(const RootedTree& t, const Permutation& pi);

/// |Pi(t)| = product over internal nodes of (#children)!, saturated at UINT64_MAX.
std::uint64_t count_orders(const RootedTree& t);

constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Streams every member of Pi(t) exactly once. Binary trees are walked in
/// child-flip Gray-code order, other trees in lexicographic child-permutation order.
class OrderEnumerator {
 public:
  /// Throws Error(cap_exceeded) when |Pi(t)| > cap.
  explicit OrderEnumerator(const RootedTree& t, std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<Permutation> next();

 private:
  Permutation emit() const;
  bool advance();

  const RootedTree* tree_;
  std::vector<NodeId> internal_;
  std::vector<std::vector<int>> child_order_;  // per internal node, indices into its children
  std::uint64_t step_ = 0;
  bool done_ = false;
};

std::vector<Permutation> enumerate_orders(const RootedTree& t, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace tangle
