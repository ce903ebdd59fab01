#pragma once

#include <string>

#include "tangle/tree.hpp"
#include "tangle/witness.hpp"

namespace tangle {

struct RenderOptions {
  int row_height = 20;
  int column_width = 48;
  int level_width = 24;
};

/// Standalone SVG 1.1 drawing of the one-sided tanglegram: the fixed leaf order 1..n
/// on the left, t in the witness order on the right, and one crossing column per
/// transposition with the two exchanged blocks drawn as bands. Output depends only
/// on the inputs. Throws Error(invalid_witness) unless the order is in Pi(t) and the
/// sequence sorts it.
std::string render_svg(const RootedTree& t, const Witness& w, const RenderOptions& opts = {});

}  // namespace tangle
