#pragma once

#include <optional>

#include "tangle/permutation.hpp"

namespace tangle::detail {

// Moves the element at position `from` directly behind position `anchor`
// (anchor 0 is the front).
inline std::optional<Transposition> move_after(int from, int anchor) {
  if (anchor == from - 1) return std::nullopt;
  if (anchor >= from) return Transposition(from, from + 1, anchor + 1);
  return Transposition(anchor + 1, from, from + 1);
}

// Moves the element at position `from` directly in front of position `anchor`
// (anchor n+1 is the end).
inline std::optional<Transposition> move_before(int from, int anchor) {
  if (anchor == from + 1) return std::nullopt;
  if (anchor > from) return Transposition(from, from + 1, anchor);
  return Transposition(anchor, from, from + 1);
}

}  // namespace tangle::detail
