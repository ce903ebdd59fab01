#include "tangle/breakpoint_dp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <span>
#include <utility>

#include "tangle/error.hpp"

namespace tangle {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int add(int a, int b) { return std::min(kInf, a + b); }

// Leaves in the stored child order; every subtree covers a contiguous range.
struct Layout {
  std::vector<int> leaf_at;
  std::vector<int> pos;
  std::vector<int> lo;
  std::vector<int> hi;

  explicit Layout(const RootedTree& t)
      : pos(static_cast<std::size_t>(t.leaf_count()) + 1),
        lo(static_cast<std::size_t>(t.node_count())),
        hi(static_cast<std::size_t>(t.node_count())) {
    for (NodeId v : t.postorder()) {
      const auto vi = static_cast<std::size_t>(v);
      if (t.is_leaf(v)) {
        lo[vi] = static_cast<int>(leaf_at.size());
        hi[vi] = lo[vi] + 1;
        pos[static_cast<std::size_t>(t.label(v))] = lo[vi];
        leaf_at.push_back(t.label(v));
      } else {
        lo[vi] = lo[static_cast<std::size_t>(t.children(v).front())];
        hi[vi] = hi[static_cast<std::size_t>(t.children(v).back())];
      }
    }
  }

  bool contains(NodeId v, int label) const {
    const int p = pos[static_cast<std::size_t>(label)];
    return lo[static_cast<std::size_t>(v)] <= p && p < hi[static_cast<std::size_t>(v)];
  }

  std::span<const int> leaves(NodeId v) const {
    const auto vi = static_cast<std::size_t>(v);
    return std::span<const int>(leaf_at).subspan(static_cast<std::size_t>(lo[vi]),
                                                 static_cast<std::size_t>(hi[vi] - lo[vi]));
  }
};

// The child of binary node v whose subtree does not contain `label`.
NodeId other_child(const RootedTree& t, const Layout& lay, NodeId v, int label) {
  const auto ch = t.children(v);
  return lay.contains(ch[0], label) ? ch[1] : ch[0];
}

// Cost of the first element and of the last element of a whole order.
int start_cost(Objective objective, int first) {
  return objective == Objective::blocks ? 1 : (first != 1 ? 1 : 0);
}
int end_cost(Objective objective, int last, int n) { return objective == Objective::blocks ? 0 : (last != n ? 1 : 0); }

}  // namespace

int objective_value(const Permutation& pi, Objective objective) {
  return objective == Objective::blocks ? blocks(pi) : breakpoints(pi);
}

int rob(int p) {
  if (p < 2) throw Error(Errc::invalid_argument, "rob needs p >= 2");
  return std::countr_zero(static_cast<unsigned>(p - 1)) + 1;
}

OrderResult min_blocks_binary(const RootedTree& t, Objective objective) {
  if (!t.is_binary()) throw Error(Errc::not_binary, "the pair-table DP needs a binary tree");
  const int n = t.leaf_count();
  const Layout lay(t);
  const auto w = static_cast<std::size_t>(n) + 1;
  auto idx = [w](int i, int j) { return static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j); };

  // B[i][j]: fewest blocks of an order of T(lca(i,j)) starting with i and ending with j.
  // H/L record the split: order(i,H) followed by order(L,j).
  std::vector<int> B(w * w, kInf), H(w * w, 0), L(w * w, 0);
  for (int x = 1; x <= n; ++x) B[idx(x, x)] = 1;

  std::vector<int> temp(w), temp_h(w);
  for (NodeId v : t.postorder()) {
    if (t.is_leaf(v)) continue;
    const auto ch = t.children(v);
    for (auto [first, second] : {std::pair{ch[0], ch[1]}, std::pair{ch[1], ch[0]}}) {
      for (int i : lay.leaves(first)) {
        // Possible last leaves of T(first) given that it starts with i.
        const NodeId ends = t.is_leaf(first) ? first : other_child(t, lay, first, i);
        int best = kInf, arg = 0;
        for (int h : lay.leaves(ends)) {
          const int c = B[idx(i, h)];
          if (c < best || (c == best && h < arg)) {
            best = c;
            arg = h;
          }
        }
        // Temp(i, l) = min over h of B(first, i, h) - [h + 1 = l].
        for (int l : lay.leaves(second)) {
          temp[static_cast<std::size_t>(l)] = best;
          temp_h[static_cast<std::size_t>(l)] = arg;
          if (l > 1 && lay.contains(ends, l - 1)) {
            const int c = B[idx(i, l - 1)] - 1;
            if (c < temp[static_cast<std::size_t>(l)] ||
                (c == temp[static_cast<std::size_t>(l)] && l - 1 < temp_h[static_cast<std::size_t>(l)])) {
              temp[static_cast<std::size_t>(l)] = c;
              temp_h[static_cast<std::size_t>(l)] = l - 1;
            }
          }
        }
        for (int j : lay.leaves(second)) {
          const NodeId starts = t.is_leaf(second) ? second : other_child(t, lay, second, j);
          int val = kInf, bh = 0, bl = 0;
          for (int l : lay.leaves(starts)) {
            const int c = add(temp[static_cast<std::size_t>(l)], B[idx(l, j)]);
            const int h = temp_h[static_cast<std::size_t>(l)];
            if (c < val || (c == val && std::pair{h, l} < std::pair{bh, bl})) {
              val = c;
              bh = h;
              bl = l;
            }
          }
          B[idx(i, j)] = val;
          H[idx(i, j)] = bh;
          L[idx(i, j)] = bl;
        }
      }
    }
  }

  int best = kInf, bi = 0, bj = 0;
  auto consider = [&](int i, int j) {
    int c = B[idx(i, j)];
    if (objective == Objective::breakpoints) c = c - 1 + start_cost(objective, i) + end_cost(objective, j, n);
    if (c < best || (c == best && std::pair{i, j} < std::pair{bi, bj})) {
      best = c;
      bi = i;
      bj = j;
    }
  };
  if (n == 1) {
    consider(1, 1);
  } else {
    const auto ch = t.children(t.root());
    for (auto [first, second] : {std::pair{ch[0], ch[1]}, std::pair{ch[1], ch[0]}})
      for (int i : lay.leaves(first))
        for (int j : lay.leaves(second)) consider(i, j);
  }

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> stack{{bi, bj}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (i == j) {
      order.push_back(i);
      continue;
    }
    stack.emplace_back(L[idx(i, j)], j);
    stack.emplace_back(i, H[idx(i, j)]);
  }
  return {Permutation(std::move(order)), best};
}

namespace {

// Prefix DP over complete binary trees. Leaf x fixed at position p of an order of
// T(v) can only be preceded by leaves of prec(x, rob(p)), the sibling subtree at
// the level of the lowest one bit of p - 1. Reading positions from the right gives
// the same structure for successors.
class CompleteDp {
 public:
  CompleteDp(const RootedTree& t, Objective objective)
      : t_(t), objective_(objective), lay_(t), n_(t.leaf_count()), k_(std::countr_zero(static_cast<unsigned>(n_))) {
    const auto levels = static_cast<std::size_t>(k_) + 1;
    par_.assign(static_cast<std::size_t>(n_ + 1) * levels, kNoNode);
    for (int x = 1; x <= n_; ++x) {
      NodeId v = t.leaf_node(x);
      for (int j = 0; j <= k_; ++j) {
        par_[slot(x, j)] = v;
        v = t.parent(v);
      }
    }
    prev_level_.assign(static_cast<std::size_t>(n_) + 2, -1);
    next_level_.assign(static_cast<std::size_t>(n_) + 2, -1);
    for (int x = 1; x < n_; ++x) {
      const int level = k_ - t.depth(t.lca(t.leaf_node(x), t.leaf_node(x + 1)));
      next_level_[static_cast<std::size_t>(x)] = level;
      prev_level_[static_cast<std::size_t>(x + 1)] = level;
    }
    post_ = t.postorder();
    post_index_.resize(static_cast<std::size_t>(t.node_count()));
    for (std::size_t q = 0; q < post_.size(); ++q) post_index_[static_cast<std::size_t>(post_[q])] = q;
    node_val_.assign(static_cast<std::size_t>(t.node_count()), kInf);
  }

  OrderResult solve_full() {
    std::vector<int> init(static_cast<std::size_t>(n_) + 1, kInf);
    for (int x = 1; x <= n_; ++x) init[static_cast<std::size_t>(x)] = start_cost(objective_, x);
    std::vector<int> table;
    const auto last = run(t_.root(), k_, init, true, n_, &table);
    const auto w = static_cast<std::size_t>(n_) + 1;
    auto at = [&](int p, int x) { return table[static_cast<std::size_t>(p - 1) * w + static_cast<std::size_t>(x)]; };

    int best = kInf, x = 0;
    for (int i = 1; i <= n_; ++i) {
      const int c = add(last[static_cast<std::size_t>(i)], end_cost(objective_, i, n_));
      if (c < best) {
        best = c;
        x = i;
      }
    }
    std::vector<int> order(static_cast<std::size_t>(n_));
    order.back() = x;
    for (int p = n_; p >= 2; --p) {
      const int target = at(p, x);
      const NodeId from = prec(x, rob(p));
      int pick = 0;
      for (int j : lay_.leaves(from)) {
        if (add(at(p - 1, j), j + 1 == x ? 0 : 1) == target && (pick == 0 || j < pick)) pick = j;
      }
      x = pick;
      order[static_cast<std::size_t>(p - 2)] = x;
    }
    return {Permutation(std::move(order)), best};
  }

  OrderResult solve_compact() {
    std::vector<int> start(static_cast<std::size_t>(n_) + 1, kInf), end(static_cast<std::size_t>(n_) + 1, kInf);
    for (int x = 1; x <= n_; ++x) {
      start[static_cast<std::size_t>(x)] = start_cost(objective_, x);
      end[static_cast<std::size_t>(x)] = end_cost(objective_, x, n_);
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    const int value = split(t_.root(), k_, start, end, order);
    return {Permutation(std::move(order)), value};
  }

 private:
  std::size_t slot(int x, int level) const {
    return static_cast<std::size_t>(x) * (static_cast<std::size_t>(k_) + 1) + static_cast<std::size_t>(level);
  }

  NodeId prec(int x, int level) const {
    const NodeId p = par_[slot(x, level)];
    const NodeId below = par_[slot(x, level - 1)];
    const auto ch = t_.children(p);
    return ch[0] == below ? ch[1] : ch[0];
  }

  // Values for positions 1..steps of an order of T(v) (height h) read left to right
  // (forward) or right to left. Returns the layer at `steps`; `table` receives every
  // layer when given.
  std::vector<int> run(NodeId v, int h, const std::vector<int>& init, bool forward, int steps,
                       std::vector<int>* table) {
    const auto leaves = lay_.leaves(v);
    const auto w = static_cast<std::size_t>(n_) + 1;
    std::vector<int> cur(w, kInf), next(w, kInf);
    for (int x : leaves) cur[static_cast<std::size_t>(x)] = init[static_cast<std::size_t>(x)];
    if (table) {
      table->assign(static_cast<std::size_t>(steps) * w, kInf);
      std::copy(cur.begin(), cur.end(), table->begin());
    }
    const std::size_t last = post_index_[static_cast<std::size_t>(v)];
    const std::size_t first = last + 1 - (2 * (std::size_t{1} << h) - 1);
    const auto& neighbour_level = forward ? prev_level_ : next_level_;
    for (int p = 2; p <= steps; ++p) {
      for (std::size_t q = first; q <= last; ++q) {
        const NodeId u = post_[q];
        if (t_.is_leaf(u)) {
          node_val_[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(t_.label(u))];
        } else {
          const auto ch = t_.children(u);
          node_val_[static_cast<std::size_t>(u)] =
              std::min(node_val_[static_cast<std::size_t>(ch[0])], node_val_[static_cast<std::size_t>(ch[1])]);
        }
      }
      const int r = rob(p);
      for (int x : leaves) {
        int c = add(node_val_[static_cast<std::size_t>(prec(x, r))], 1);
        if (neighbour_level[static_cast<std::size_t>(x)] == r) {
          c = std::min(c, cur[static_cast<std::size_t>(forward ? x - 1 : x + 1)]);
        }
        next[static_cast<std::size_t>(x)] = c;
      }
      std::swap(cur, next);
      if (table) std::copy(cur.begin(), cur.end(), table->begin() + static_cast<std::ptrdiff_t>((p - 1) * w));
    }
    return cur;
  }

  // Optimal order of T(v) under the given first/last costs, appended to `out`.
  // Only the two middle elements are fixed at this level; each half recurses with
  // its end pinned.
  int split(NodeId v, int h, const std::vector<int>& start, const std::vector<int>& end, std::vector<int>& out) {
    if (h == 0) {
      const int x = t_.label(v);
      out.push_back(x);
      return add(start[static_cast<std::size_t>(x)], end[static_cast<std::size_t>(x)]);
    }
    const int m = 1 << (h - 1);
    const auto fwd = run(v, h, start, true, m, nullptr);
    const auto bwd = run(v, h, end, false, m, nullptr);

    const auto ch = t_.children(v);
    int min_val[2] = {kInf, kInf}, min_arg[2] = {0, 0};
    for (int c = 0; c < 2; ++c)
      for (int x : lay_.leaves(ch[static_cast<std::size_t>(c)])) {
        const int val = fwd[static_cast<std::size_t>(x)];
        if (val < min_val[c] || (val == min_val[c] && x < min_arg[c])) {
          min_val[c] = val;
          min_arg[c] = x;
        }
      }
    int best = kInf, bi = 0, bj = 0;
    for (int c = 0; c < 2; ++c) {
      const int o = 1 - c;
      for (int j : lay_.leaves(ch[static_cast<std::size_t>(c)])) {
        int val = add(add(min_val[o], 1), bwd[static_cast<std::size_t>(j)]);
        int i = min_arg[o];
        if (j > 1 && lay_.contains(ch[static_cast<std::size_t>(o)], j - 1)) {
          const int direct = add(fwd[static_cast<std::size_t>(j - 1)], bwd[static_cast<std::size_t>(j)]);
          if (direct < val || (direct == val && j - 1 < i)) {
            val = direct;
            i = j - 1;
          }
        }
        if (val < best || (val == best && std::pair{i, j} < std::pair{bi, bj})) {
          best = val;
          bi = i;
          bj = j;
        }
      }
    }

    const NodeId left = lay_.contains(ch[0], bi) ? ch[0] : ch[1];
    const NodeId right = left == ch[0] ? ch[1] : ch[0];
    std::vector<int> pinned(static_cast<std::size_t>(n_) + 1, kInf);
    pinned[static_cast<std::size_t>(bi)] = 0;
    split(left, h - 1, start, pinned, out);
    pinned[static_cast<std::size_t>(bi)] = kInf;
    pinned[static_cast<std::size_t>(bj)] = 0;
    split(right, h - 1, pinned, end, out);
    return best;
  }

  const RootedTree& t_;
  Objective objective_;
  Layout lay_;
  int n_;
  int k_;
  std::vector<NodeId> par_;
  std::vector<int> prev_level_;  // level of lca(x-1, x)
  std::vector<int> next_level_;  // level of lca(x, x+1)
  std::vector<NodeId> post_;
  std::vector<std::size_t> post_index_;
  std::vector<int> node_val_;
};

}  // namespace

OrderResult min_blocks_complete(const RootedTree& t, Objective objective, SpaceMode mode) {
  if (!t.is_complete_binary()) throw Error(Errc::not_complete_binary, "the prefix DP needs a complete binary tree");
  CompleteDp dp(t, objective);
  return mode == SpaceMode::full ? dp.solve_full() : dp.solve_compact();
}

Witness approximate_otbcm(const RootedTree& t, const Sorter& sorter) {
  if (!t.is_binary()) throw Error(Errc::not_binary, "the approximation needs a binary tree");
  auto best = t.is_complete_binary() ? min_blocks_complete(t, Objective::breakpoints)
                                     : min_blocks_binary(t, Objective::breakpoints);
  auto sorted = sorter.sort(best.order);
  return {std::move(best.order), std::move(sorted.sequence)};
}

}  // namespace tangle
