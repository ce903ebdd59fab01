#pragma once

#include "tangle/permutation.hpp"
#include "tangle/sbt.hpp"
#include "tangle/tree.hpp"
#include "tangle/witness.hpp"

namespace tangle {

enum class Objective { blocks, breakpoints };

struct OrderResult {
  Permutation order;  // a member of Pi(t) attaining `value`
  int value;
};

/// blocks(pi) or breakpoints(pi).
int objective_value(const Permutation& pi, Objective objective);

/// Optimal leaf order of a binary tree by the pair table B(v, i, j): O(n^3) time,
/// O(n^2) space. Ties prefer the lexicographically smallest split (h, l).
/// Throws Error(not_binary).
OrderResult min_blocks_binary(const RootedTree& t, Objective objective);

enum class SpaceMode {
  full,     // O(n^2) table, direct backtracking
  compact,  // O(n log n): split at the middle element and recurse on both halves
};

/// Left-to-right prefix DP for complete binary trees: O(n^2) time.
/// Throws Error(not_complete_binary).
OrderResult min_blocks_complete(const RootedTree& t, Objective objective, SpaceMode mode = SpaceMode::full);

/// Index of the rightmost one bit of p - 1, counted from 1. Requires p >= 2.
int rob(int p);

/// Breakpoint-minimal order of t (complete-tree DP when t is complete, the general
/// binary DP otherwise), sorted by `sorter`. Throws Error(not_binary).
Witness approximate_otbcm(const RootedTree& t, const Sorter& sorter = greedy_sorter());

}  // namespace tangle
