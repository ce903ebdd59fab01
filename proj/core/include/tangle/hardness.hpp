#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangle/permutation.hpp"
#include "tangle/tree.hpp"

namespace tangle {

struct HardnessInstance {
  RootedTree tree;
  int threshold = 0;
  std::string provenance;
};

/// Replaces the last element e by the block (e, e+1), shifting larger values up,
/// until the length is 2^p - 1. The glued permutation is unchanged.
Permutation pad_permutation(const Permutation& pi);

/// Complete binary tree on 2^{p+1} leaves whose leaf row is
/// 1, 2pi_1, 2pi_1+1, ..., 2pi_m, 2pi_m+1, 2^{p+1}. Threshold floor(bp(pi) / 3).
/// Throws Error(bad_length) unless |pi| = 2^p - 1.
HardnessInstance build_sbt_tree(const Permutation& pi);

/// Arcs are (source, target) over vertices 1..vertices; the arc index is the list position.
struct Digraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> arcs;
};

/// One "u v" arc per line; blank lines and '#' comments ignored; the vertex count is
/// the largest id. Throws ParseError(parse_error) with the 1-based line, also for
/// self-loops and repeated arcs.
Digraph parse_digraph(std::string_view text);
Digraph read_digraph(std::istream& in);

/// Depth-three tree whose minimum block count reaches the threshold iff the digraph
/// has a Hamiltonian path. Throws Error(isolated_vertex), and Error(invalid_argument)
/// for self-loops, repeated arcs or ids outside 1..vertices.
HardnessInstance build_hp_tree(const Digraph& g);

/// Increments every label and hangs the old root and a node u with leaves 1 and
/// n+2 under a new root. Blocks <= k on t iff breakpoints <= k + 2 on the result.
HardnessInstance build_bp_tree(const RootedTree& t, int k);

enum class Shape { binary, complete, arbitrary };

/// Throws Error(invalid_argument) for unknown names.
Shape parse_shape(std::string_view name);

/// Seeded tree with n leaves and a uniformly shuffled labeling. Binary shapes are
/// uniform over ordered full binary trees; arbitrary shapes contract random edges of
/// one. Throws Error(bad_shape) for complete with n not a power of two, and for n < 1.
RootedTree random_instance(std::uint64_t seed, int n, Shape shape);

}  // namespace tangle
