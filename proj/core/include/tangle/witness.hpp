#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/permutation.hpp"

namespace tangle {

/// A leaf order together with an id-transposition sequence for it.
struct Witness {
  Permutation order;
  std::vector<Transposition> sequence;

  int length() const noexcept { return static_cast<int>(sequence.size()); }

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Line 1: the permutation, space separated. Then one "i j k" line per transposition.
/// LF line endings, no trailing whitespace.
std::string format_witness(const Witness& w);
void write_witness(std::ostream& os, const Witness& w);

/// Inverse of format_witness. Throws ParseError(parse_error) with a 1-based line number.
/// Transpositions must satisfy 1 <= i < j < k <= n + 1.
Witness parse_witness(std::string_view text);
Witness read_witness(std::istream& is);

}  // namespace tangle
