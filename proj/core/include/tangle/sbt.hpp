#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangle/permutation.hpp"

namespace tangle {

/// An id-transposition sequence: applying `sequence` left to right sorts the input.
struct SortResult {
  std::vector<Transposition> sequence;

  int distance() const noexcept { return static_cast<int>(sequence.size()); }
};

constexpr int kDefaultExactCap = 10;

/// Shortest sorting sequence by breadth-first search over the glued permutation.
/// Throws Error(size_cap_exceeded) when the glued permutation is longer than `cap`.
SortResult exact_distance(const Permutation& pi, int cap = kDefaultExactCap);

/// Bounded search-tree sorter: a sequence of length <= k, or nullopt if none exists.
/// The returned sequence is a shortest one.
std::optional<SortResult> fpt_sort(const Permutation& pi, int k);

/// Repeated block shifts (x behind x-1 or in front of x+1 on the glued permutation),
/// each removing at least one breakpoint. Length <= bp(pi).
SortResult greedy_sort(const Permutation& pi);

/// True iff `sequence` sorts `pi` and has length <= k. Throws Error(index_out_of_range)
/// for a transposition that does not fit the permutation.
bool verify_sequence(const Permutation& pi, std::span<const Transposition> sequence, int k);

/// Translates a sorting sequence for gl(pi) into one for pi by moving the
/// corresponding blocks.
std::vector<Transposition> expand_glued_sequence(const Permutation& pi, std::span<const Transposition> glued);

/// Pluggable sorting backend for the approximation pipeline.
struct Sorter {
  std::string name;
  std::function<SortResult(const Permutation&)> sort;
};

Sorter greedy_sorter();
Sorter exact_sorter(int cap = kDefaultExactCap);

}  // namespace tangle
