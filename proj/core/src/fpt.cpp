#include "tangle/fpt.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangle/error.hpp"
#include "tangle/sbt.hpp"

namespace tangle {

OrderAssignment::OrderAssignment(const RootedTree& t) : tree_(&t) {
  if (!t.is_binary()) throw Error(Errc::not_binary, "order assignments need a binary tree");
  const auto count = static_cast<std::size_t>(t.node_count());
  lead_.assign(count, kNoNode);
  first_.assign(count, 0);
  last_.assign(count, 0);
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (!t.is_leaf(v)) continue;
    lead_[static_cast<std::size_t>(v)] = v;
    first_[static_cast<std::size_t>(v)] = last_[static_cast<std::size_t>(v)] = t.label(v);
  }
}

void OrderAssignment::decide(NodeId v, NodeId lead) {
  const auto ch = tree_->children(v);
  const NodeId other = ch[0] == lead ? ch[1] : ch[0];
  const auto vi = static_cast<std::size_t>(v);
  lead_[vi] = lead;
  first_[vi] = first(lead);
  last_[vi] = last(other);
  if (last(lead) + 1 != first(other)) ++bp_;
}

std::optional<std::vector<int>> OrderAssignment::sequence(NodeId v) const {
  if (!decided(v)) return std::nullopt;
  std::vector<int> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (tree_->is_leaf(u)) {
      out.push_back(tree_->label(u));
      continue;
    }
    const NodeId lead = lead_[static_cast<std::size_t>(u)];
    const auto ch = tree_->children(u);
    stack.push_back(ch[0] == lead ? ch[1] : ch[0]);
    stack.push_back(lead);
  }
  return out;
}

std::pair<RootedTree, ReductionTrace> reduce_rule1(const RootedTree& t) {
  if (!t.is_binary()) throw Error(Errc::not_binary, "sibling contraction needs a binary tree");
  const auto count = static_cast<std::size_t>(t.node_count());
  std::vector<std::vector<NodeId>> children(count);
  std::vector<int> label(count, 0);
  for (NodeId v = 0; v < t.node_count(); ++v) {
    children[static_cast<std::size_t>(v)].assign(t.children(v).begin(), t.children(v).end());
    label[static_cast<std::size_t>(v)] = t.label(v);
  }
  auto is_leaf = [&](NodeId v) { return children[static_cast<std::size_t>(v)].empty(); };

  ReductionTrace trace;
  trace.original_leaves = t.leaf_count();
  const auto order = t.postorder();
  while (true) {
    NodeId pick = kNoNode;
    int pick_x = 0;
    for (NodeId v : order) {
      const auto& ch = children[static_cast<std::size_t>(v)];
      if (ch.size() != 2 || !is_leaf(ch[0]) || !is_leaf(ch[1])) continue;
      const int a = label[static_cast<std::size_t>(ch[0])];
      const int b = label[static_cast<std::size_t>(ch[1])];
      if (std::abs(a - b) != 1) continue;
      const int x = std::min(a, b);
      if (pick == kNoNode || x < pick_x) {
        pick = v;
        pick_x = x;
      }
    }
    if (pick == kNoNode) break;
    children[static_cast<std::size_t>(pick)].clear();
    label[static_cast<std::size_t>(pick)] = pick_x;
    for (NodeId v : order) {
      if (is_leaf(v) && v != pick && label[static_cast<std::size_t>(v)] > pick_x + 1) --label[static_cast<std::size_t>(v)];
    }
    trace.steps.push_back({pick_x, pick});
  }

  TreeBuilder builder;
  std::vector<NodeId> rebuilt(count, kNoNode);
  std::vector<NodeId> live;
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    live.push_back(v);
    for (NodeId c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
  for (auto it = live.rbegin(); it != live.rend(); ++it) {
    const NodeId v = *it;
    if (is_leaf(v)) {
      rebuilt[static_cast<std::size_t>(v)] = builder.leaf(label[static_cast<std::size_t>(v)]);
    } else {
      std::vector<NodeId> ch;
      for (NodeId c : children[static_cast<std::size_t>(v)]) ch.push_back(rebuilt[static_cast<std::size_t>(c)]);
      rebuilt[static_cast<std::size_t>(v)] = builder.internal(std::move(ch));
    }
  }
  return {std::move(builder).build(rebuilt[static_cast<std::size_t>(t.root())]), std::move(trace)};
}

Witness lift_witness(const Witness& reduced, const ReductionTrace& trace) {
  std::vector<int> order(reduced.order.values().begin(), reduced.order.values().end());
  std::vector<Transposition> sequence = reduced.sequence;
  for (auto step = trace.steps.rbegin(); step != trace.steps.rend(); ++step) {
    const int x = step->x;
    std::vector<int> running = order;
    std::vector<Transposition> lifted;
    lifted.reserve(sequence.size());
    for (const auto& t : sequence) {
      const int pos_x = static_cast<int>(std::find(running.begin(), running.end(), x) - running.begin()) + 1;
      auto shift = [pos_x](int b) { return b > pos_x ? b + 1 : b; };
      lifted.emplace_back(shift(t.i), shift(t.j), shift(t.k));
      apply_transposition_inplace(running, t);
    }
    std::vector<int> grown;
    grown.reserve(order.size() + 1);
    for (int v : order) {
      if (v < x) {
        grown.push_back(v);
      } else if (v == x) {
        grown.push_back(x);
        grown.push_back(x + 1);
      } else {
        grown.push_back(v + 1);
      }
    }
    order = std::move(grown);
    sequence = std::move(lifted);
  }
  return {Permutation(std::move(order)), std::move(sequence)};
}

namespace {

// Leaf attachment at a single node; true if it fired.
bool rule2_at(OrderAssignment& f, NodeId v) {
  const auto& t = f.tree();
  if (t.is_leaf(v) || f.decided(v)) return false;
  const auto ch = t.children(v);
  if (!f.decided(ch[0]) || !f.decided(ch[1])) return false;
  for (int side = 0; side < 2; ++side) {
    const NodeId leaf = ch[static_cast<std::size_t>(side)];
    const NodeId w = ch[static_cast<std::size_t>(1 - side)];
    if (!t.is_leaf(leaf)) continue;
    const int x = t.label(leaf);
    if (f.first(w) == x + 1) {
      f.decide(v, leaf);
      return true;
    }
    if (f.last(w) == x - 1) {
      f.decide(v, w);
      return true;
    }
  }
  return false;
}

}  // namespace

void reduce_rule2(OrderAssignment& f) {
  // Firing at v can only enable v's parent, which comes later in postorder.
  for (NodeId v : f.tree().postorder()) rule2_at(f, v);
}

void reduce_rule2_upward(OrderAssignment& f, NodeId v) {
  const auto& t = f.tree();
  while (v != kNoNode && (f.decided(v) || rule2_at(f, v))) v = t.parent(v);
}

int bp_of_f(const OrderAssignment& f) {
  const auto& t = f.tree();
  int count = 0;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (!f.decided(v) || t.is_leaf(v)) continue;
    const NodeId p = t.parent(v);
    if (p != kNoNode && f.decided(p)) continue;
    const auto seq = *f.sequence(v);
    for (std::size_t q = 0; q + 1 < seq.size(); ++q)
      if (seq[q] + 1 != seq[q + 1]) ++count;
  }
  return count;
}

NodeId branch_node(const OrderAssignment& f) {
  const auto& t = f.tree();
  NodeId best = kNoNode;
  int best_depth = -1;
  // Preorder visits left subtrees first, so the first node found at a depth is the leftmost.
  for (NodeId v : t.preorder()) {
    if (t.is_leaf(v) || f.decided(v)) continue;
    const auto ch = t.children(v);
    if (!f.decided(ch[0]) || !f.decided(ch[1])) continue;
    if (t.depth(v) > best_depth) {
      best = v;
      best_depth = t.depth(v);
    }
  }
  if (best == kNoNode) throw Error(Errc::no_eligible_node, "no undecided node with both children decided");
  return best;
}

std::pair<OrderAssignment, OrderAssignment> branch_rule1(const OrderAssignment& f) {
  const NodeId v = branch_node(f);
  const auto ch = f.tree().children(v);
  OrderAssignment alpha = f, beta = f;
  alpha.decide(v, ch[0]);
  beta.decide(v, ch[1]);
  return {std::move(alpha), std::move(beta)};
}

namespace {

bool identity_reachable(const RootedTree& t) {
  for (NodeId v = 0; v < t.node_count(); ++v) {
    const auto leaves = t.leaves_under(v);
    const auto [lo, hi] = std::minmax_element(leaves.begin(), leaves.end());
    if (*hi - *lo + 1 != static_cast<int>(leaves.size())) return false;
  }
  return true;
}

class Search {
 public:
  Search(int k, SearchStats& stats) : k_(k), stats_(stats) {}

  std::optional<Witness> run(OrderAssignment& f, int depth) {
    if (f.breakpoints() > 3 * k_) {
      ++stats_.pruned;
      return std::nullopt;
    }
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const auto& t = f.tree();
    if (f.decided(t.root())) {
      ++stats_.sort_calls;
      const Permutation pi(*f.sequence(t.root()));
      auto sorted = fpt_sort(pi, k_);
      if (!sorted) return std::nullopt;
      return Witness{pi, std::move(sorted->sequence)};
    }
    const NodeId v = branch_node(f);
    const auto ch = t.children(v);
    for (NodeId lead : {ch[0], ch[1]}) {
      OrderAssignment next = f;
      next.decide(v, lead);
      reduce_rule2_upward(next, t.parent(v));
      if (auto found = run(next, depth + 1)) return found;
    }
    return std::nullopt;
  }

 private:
  int k_;
  SearchStats& stats_;
};

}  // namespace

SolveResult solve_with_stats(const RootedTree& t, int k) {
  if (!t.is_binary()) throw Error(Errc::not_binary, "the bounded search needs a binary tree");
  if (k < 0) throw Error(Errc::invalid_argument, "k must be non-negative");
  SolveResult result;
  if (k == 0) {
    if (identity_reachable(t)) result.witness = Witness{Permutation::identity(t.leaf_count()), {}};
    return result;
  }
  auto [reduced, trace] = reduce_rule1(t);
  result.stats.rule1_steps = static_cast<int>(trace.steps.size());

  OrderAssignment f(reduced);
  reduce_rule2(f);
  Search search(k, result.stats);
  auto found = search.run(f, 0);
  if (!found) return result;

  auto lifted = lift_witness(*found, trace);
  if (!is_consistent(t, lifted.order) || !verify_sequence(lifted.order, lifted.sequence, k)) {
    throw std::logic_error("lifted witness failed verification");
  }
  result.witness = std::move(lifted);
  return result;
}

std::optional<Witness> solve(const RootedTree& t, int k) { return solve_with_stats(t, k).witness; }

std::optional<Witness> solve_optimal(const RootedTree& t, int max_k) {
  for (int k = 0; k <= max_k; ++k)
    if (auto w = solve(t, k)) return w;
  return std::nullopt;
}

}  // namespace tangle
