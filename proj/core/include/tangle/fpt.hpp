#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tangle/tree.hpp"
#include "tangle/witness.hpp"

namespace tangle {

/// Partial order assignment f over the nodes of a binary tree. Leaves are always
/// decided as (x); an internal node is either undecided or fixed to f(w) * f(x) for
/// its two decided children in one of the two orders.
class OrderAssignment {
 public:
  /// Leaves decided, internal nodes undecided. Throws Error(not_binary).
  explicit OrderAssignment(const RootedTree& t);

  const RootedTree& tree() const noexcept { return *tree_; }

  bool decided(NodeId v) const { return lead_[static_cast<std::size_t>(v)] != kNoNode; }
  /// First and last leaf label of f(v); v must be decided.
  int first(NodeId v) const { return first_[static_cast<std::size_t>(v)]; }
  int last(NodeId v) const { return last_[static_cast<std::size_t>(v)]; }

  /// Fixes f(v) = f(lead) * f(other child). v must be undecided with both children
  /// decided. Updates the breakpoint count from the single new seam.
  void decide(NodeId v, NodeId lead);

  /// f(v) as a leaf sequence, or nullopt for an undecided node.
  std::optional<std::vector<int>> sequence(NodeId v) const;

  /// bp(f), maintained incrementally.
  int breakpoints() const noexcept { return bp_; }

 private:
  const RootedTree* tree_;
  std::vector<NodeId> lead_;  // leaves lead with themselves
  std::vector<int> first_;
  std::vector<int> last_;
  int bp_ = 0;
};

struct Rule1Step {
  int x;          // the surviving label; x + 1 was merged into it
  NodeId parent;  // node id in the input tree that became leaf x
};

struct ReductionTrace {
  int original_leaves = 0;
  std::vector<Rule1Step> steps;  // in application order
};

/// Contracts sibling leaves x, x+1 into x (decrementing larger labels) until no
/// such pair is left. The smallest x is contracted first. Throws Error(not_binary).
std::pair<RootedTree, ReductionTrace> reduce_rule1(const RootedTree& t);

/// Replays the contractions backwards: x expands to (x, x+1) and every transposition
/// boundary behind x moves one position right.
Witness lift_witness(const Witness& reduced, const ReductionTrace& trace);

/// Fixes f(v) = (x) * f(w) when f(w) starts with x+1, or f(w) * (x) when it ends
/// with x-1, for every undecided v with a leaf child x and a decided child w.
void reduce_rule2(OrderAssignment& f);

/// Applies reduce_rule2 on v and then its ancestors while it keeps firing.
void reduce_rule2_upward(OrderAssignment& f, NodeId v);

/// bp(f) recounted from the materialized sequences of the maximal decided nodes.
int bp_of_f(const OrderAssignment& f);

/// The node branch_rule1 expands: undecided with both children decided; deepest
/// first, then leftmost in the stored order. Throws Error(no_eligible_node).
NodeId branch_node(const OrderAssignment& f);

/// The two branches at branch_node(f): alpha keeps the stored child order, beta reverses it.
std::pair<OrderAssignment, OrderAssignment> branch_rule1(const OrderAssignment& f);

struct SearchStats {
  std::uint64_t nodes = 0;       // search-tree nodes that passed the bp check
  std::uint64_t pruned = 0;      // search-tree nodes cut by bp(f) > 3k
  std::uint64_t sort_calls = 0;  // decided roots handed to the sorting search
  int max_depth = 0;             // most branchings on one root-to-node path
  int rule1_steps = 0;
};

struct SolveResult {
  std::optional<Witness> witness;
  SearchStats stats;
};

/// Exact bounded search: a witness (pi in Pi(t), sequence of length <= k) iff one
/// exists. Throws Error(not_binary) and Error(invalid_argument) for k < 0.
SolveResult solve_with_stats(const RootedTree& t, int k);
std::optional<Witness> solve(const RootedTree& t, int k);

/// Smallest k for which solve succeeds, searching k = 0, 1, ... up to `max_k`.
std::optional<Witness> solve_optimal(const RootedTree& t, int max_k);

}  // namespace tangle
