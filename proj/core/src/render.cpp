#include "tangle/render.hpp"

#include <algorithm>
#include <sstream>

#include "tangle/error.hpp"
#include "tangle/sbt.hpp"

namespace tangle {

namespace {

constexpr int kMargin = 24;
constexpr int kLabelWidth = 32;
constexpr int kColumnPad = 8;

struct Geometry {
  int row;
  int left;   // x where edges leave the fixed side
  int right;  // x where edges reach the solved tree's leaves
  int center(int position) const { return kMargin + row * (position - 1) + row / 2; }
  int top(int position) const { return kMargin + row * (position - 1) + 2; }
  int bottom(int position) const { return kMargin + row * position - 2; }
};

void write_tree(std::ostream& os, const RootedTree& t, const Geometry& g, int level_width) {
  std::vector<int> y(static_cast<std::size_t>(t.node_count()), 0);
  std::vector<int> x(static_cast<std::size_t>(t.node_count()), 0);
  int max_depth = 0;
  for (NodeId v = 0; v < t.node_count(); ++v) max_depth = std::max(max_depth, t.depth(v));
  const int leaf_x = g.right;
  int position = 0;
  for (NodeId v : t.postorder()) {
    const auto vi = static_cast<std::size_t>(v);
    if (t.is_leaf(v)) {
      y[vi] = g.center(++position);
      x[vi] = leaf_x;
      continue;
    }
    const auto ch = t.children(v);
    y[vi] = (y[static_cast<std::size_t>(ch.front())] + y[static_cast<std::size_t>(ch.back())]) / 2;
    x[vi] = leaf_x + level_width * (max_depth - t.depth(v) + 1);
  }
  os << "  <g class=\"tree\">\n";
  for (NodeId v : t.preorder()) {
    if (t.is_leaf(v)) continue;
    const auto vi = static_cast<std::size_t>(v);
    const auto ch = t.children(v);
    os << "    <path d=\"M" << x[vi] << ' ' << y[static_cast<std::size_t>(ch.front())] << " V"
       << y[static_cast<std::size_t>(ch.back())] << "\"/>\n";
    for (NodeId c : ch) {
      const auto ci = static_cast<std::size_t>(c);
      os << "    <path d=\"M" << x[vi] << ' ' << y[ci] << " H" << x[ci] << "\"/>\n";
    }
  }
  const auto root = static_cast<std::size_t>(t.root());
  os << "    <path d=\"M" << x[root] << ' ' << y[root] << " H" << x[root] + level_width / 2 << "\"/>\n";
  os << "  </g>\n";
}

}  // namespace

std::string render_svg(const RootedTree& t, const Witness& w, const RenderOptions& opts) {
  const int n = t.leaf_count();
  if (w.order.size() != n || !is_consistent(t, w.order)) {
    throw Error(Errc::invalid_witness, "the witness order is not a leaf order of the tree");
  }
  if (!verify_sequence(w.order, w.sequence, w.length())) {
    throw Error(Errc::invalid_witness, "the witness sequence does not sort its order");
  }

  const int ell = w.length();
  Geometry g{opts.row_height, kMargin + kLabelWidth, 0};
  g.right = g.left + opts.column_width * (ell + 1);
  int max_depth = 0;
  for (NodeId v = 0; v < t.node_count(); ++v) max_depth = std::max(max_depth, t.depth(v));
  const int width = g.right + kColumnPad + opts.level_width * (max_depth + 2) + kMargin;
  const int height = 2 * kMargin + opts.row_height * n;

  // states[c] is the edge order right of column c; states[ell] is the identity.
  std::vector<std::vector<int>> states{std::vector<int>(w.order.values().begin(), w.order.values().end())};
  for (const auto& tau : w.sequence) {
    auto next = states.back();
    apply_transposition_inplace(next, tau);
    states.push_back(std::move(next));
  }
  auto column_right = [&](int c) { return g.right - opts.column_width * c - opts.column_width / 2 + kColumnPad; };
  auto column_left = [&](int c) { return g.right - opts.column_width * (c + 1) - opts.column_width / 2 + kColumnPad * 3; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <style>"
        ".tree path{stroke:#222;stroke-width:1.5;fill:none}"
        ".edge{stroke:#3b6ea5;stroke-width:1.2;fill:none}"
        ".band{fill:#3b6ea5;fill-opacity:0.18;stroke:#3b6ea5;stroke-width:0.6}"
        "text{font-family:sans-serif;font-size:11px}"
        "</style>\n";

  os << "  <g class=\"fixed\">\n";
  os << "    <path class=\"rail\" d=\"M" << g.left << ' ' << g.top(1) << " V" << g.bottom(std::max(n, 1))
     << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  for (int label = 1; label <= n; ++label) {
    os << "    <text x=\"" << g.left - 6 << "\" y=\"" << g.center(label) + 4 << "\" text-anchor=\"end\">" << label
       << "</text>\n";
  }
  os << "  </g>\n";

  for (int c = 0; c < ell; ++c) {
    const auto& tau = w.sequence[static_cast<std::size_t>(c)];
    const int xr = column_right(c);
    const int xl = column_left(c);
    const int shift_a = tau.k - tau.j;  // block [i, j) moves down by |[j, k)|
    const int shift_b = tau.j - tau.i;
    os << "  <g class=\"crossing\" data-index=\"" << c + 1 << "\">\n";
    os << "    <polygon class=\"band\" points=\"" << xr << ',' << g.top(tau.i) << ' ' << xr << ','
       << g.bottom(tau.j - 1) << ' ' << xl << ',' << g.bottom(tau.j - 1 + shift_a) << ' ' << xl << ','
       << g.top(tau.i + shift_a) << "\"/>\n";
    os << "    <polygon class=\"band\" points=\"" << xr << ',' << g.top(tau.j) << ' ' << xr << ','
       << g.bottom(tau.k - 1) << ' ' << xl << ',' << g.bottom(tau.k - 1 - shift_b) << ' ' << xl << ','
       << g.top(tau.j - shift_b) << "\"/>\n";
    os << "  </g>\n";
  }

  os << "  <g class=\"edges\">\n";
  std::vector<std::vector<int>> where(states.size(), std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (std::size_t s = 0; s < states.size(); ++s)
    for (int p = 0; p < n; ++p) where[s][static_cast<std::size_t>(states[s][static_cast<std::size_t>(p)])] = p + 1;
  for (int label = 1; label <= n; ++label) {
    const auto li = static_cast<std::size_t>(label);
    os << "    <polyline class=\"edge\" points=\"" << g.right << ',' << g.center(where[0][li]);
    for (int c = 0; c < ell; ++c) {
      os << ' ' << column_right(c) << ',' << g.center(where[static_cast<std::size_t>(c)][li]);
      os << ' ' << column_left(c) << ',' << g.center(where[static_cast<std::size_t>(c) + 1][li]);
    }
    os << ' ' << g.left << ',' << g.center(label) << "\"/>\n";
  }
  os << "  </g>\n";

  write_tree(os, reorder_to(t, w.order), g, opts.level_width);
  os << "</svg>\n";
  return os.str();
}

}  // namespace tangle
