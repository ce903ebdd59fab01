#include "tangle/tree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

RootedTree::RootedTree(std::vector<Node> nodes, NodeId root) : nodes_(std::move(nodes)), root_(root) {
  const auto count = nodes_.size();
  if (root < 0 || static_cast<std::size_t>(root) >= count) throw Error(Errc::invalid_argument, "root out of range");
  parent_.assign(count, kNoNode);
  depth_.assign(count, -1);

  std::vector<NodeId> stack{root};
  depth_[static_cast<std::size_t>(root)] = 0;
  std::size_t reached = 0;
  std::vector<int> labels;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    const Node& nd = nodes_[static_cast<std::size_t>(v)];
    if (nd.children.empty()) {
      labels.push_back(nd.label);
      continue;
    }
    if (nd.children.size() < 2) throw Error(Errc::invalid_argument, "internal node with a single child");
    if (nd.children.size() != 2) binary_ = false;
    for (NodeId c : nd.children) {
      if (c < 0 || static_cast<std::size_t>(c) >= count || depth_[static_cast<std::size_t>(c)] != -1) {
        throw Error(Errc::invalid_argument, "node arena is not a tree");
      }
      depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
      parent_[static_cast<std::size_t>(c)] = v;
      stack.push_back(c);
    }
  }
  if (reached != count) throw Error(Errc::invalid_argument, "node arena has unreachable nodes");

  const int n = static_cast<int>(labels.size());
  leaf_node_.assign(static_cast<std::size_t>(n) + 1, kNoNode);
  std::vector<int> duplicates;
  for (std::size_t v = 0; v < count; ++v) {
    if (!nodes_[v].children.empty()) continue;
    const int label = nodes_[v].label;
    if (label < 1 || label > n) {
      duplicates.push_back(label);
      continue;
    }
    if (leaf_node_[static_cast<std::size_t>(label)] != kNoNode) duplicates.push_back(label);
    else leaf_node_[static_cast<std::size_t>(label)] = static_cast<NodeId>(v);
  }
  if (!duplicates.empty()) {
    std::ostringstream msg;
    msg << "leaf labels must be exactly [" << n << "];";
    msg << " missing:";
    for (int x = 1; x <= n; ++x)
      if (leaf_node_[static_cast<std::size_t>(x)] == kNoNode) msg << ' ' << x;
    msg << "; duplicate or out of range:";
    for (int x : duplicates) msg << ' ' << x;
    throw Error(Errc::label_set_error, msg.str());
  }
}

bool RootedTree::is_complete_binary() const noexcept {
  if (!binary_) return false;
  const int d = depth_[static_cast<std::size_t>(leaf_node_[1])];
  for (std::size_t x = 1; x < leaf_node_.size(); ++x)
    if (depth_[static_cast<std::size_t>(leaf_node_[x])] != d) return false;
  return true;
}

NodeId RootedTree::lca(NodeId a, NodeId b) const {
  while (depth(a) > depth(b)) a = parent(a);
  while (depth(b) > depth(a)) b = parent(b);
  while (a != b) {
    a = parent(a);
    b = parent(b);
  }
  return a;
}

std::vector<NodeId> RootedTree::preorder() const {
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& ch = node(v).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> RootedTree::postorder() const {
  // Reverse of a root-right-left preorder.
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (NodeId c : node(v).children) stack.push_back(c);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> RootedTree::leaves_under(NodeId v) const {
  std::vector<int> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    const auto& ch = node(u).children;
    if (ch.empty()) out.push_back(node(u).label);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

NodeId TreeBuilder::leaf(int label) {
  nodes_.push_back({{}, label});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId TreeBuilder::internal(std::vector<NodeId> children) {
  nodes_.push_back({std::move(children), 0});
  return static_cast<NodeId>(nodes_.size() - 1);
}

RootedTree TreeBuilder::build(NodeId root) && { return RootedTree(std::move(nodes_), root); }

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    const NodeId root = subtree();
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected text after ';'");
    return std::move(builder_).build(root);
  }

 private:
  NodeId subtree() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      std::vector<NodeId> children{subtree()};
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(subtree());
        skip_ws();
      }
      if (children.size() < 2) fail("internal node needs at least two children");
      expect(')');
      return builder_.internal(std::move(children));
    }
    return builder_.leaf(number());
  }

  int number() {
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) fail("leaf label too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected '(' or a leaf label");
    if (value < 1) fail("leaf labels start at 1", start);
    return static_cast<int>(value);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(Errc::syntax_error, at, "syntax error at offset " + std::to_string(at) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TreeBuilder builder_;
};

void serialize_into(const RootedTree& t, NodeId v, std::string& out) {
  if (t.is_leaf(v)) {
    out += std::to_string(t.label(v));
    return;
  }
  out += '(';
  bool first = true;
  for (NodeId c : t.children(v)) {
    if (!first) out += ',';
    first = false;
    serialize_into(t, c, out);
  }
  out += ')';
}

}  // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string serialize(const RootedTree& t) {
  std::string out;
  serialize_into(t, t.root(), out);
  out += ';';
  return out;
}

Permutation current_leaf_order(const RootedTree& t) { return Permutation(t.leaves_under(t.root())); }

bool is_consistent(const RootedTree& t, const Permutation& pi) {
  if (pi.size() != t.leaf_count()) {
    throw Error(Errc::length_mismatch, "permutation has " + std::to_string(pi.size()) + " elements, tree has " +
                                           std::to_string(t.leaf_count()) + " leaves");
  }
  const auto pos = pi.inverse();
  const auto count = static_cast<std::size_t>(t.node_count());
  std::vector<int> lo(count), hi(count), size(count);
  for (NodeId v : t.postorder()) {
    const auto vi = static_cast<std::size_t>(v);
    if (t.is_leaf(v)) {
      lo[vi] = hi[vi] = pos[static_cast<std::size_t>(t.label(v))];
      size[vi] = 1;
      continue;
    }
    lo[vi] = std::numeric_limits<int>::max();
    hi[vi] = 0;
    size[vi] = 0;
    for (NodeId c : t.children(v)) {
      const auto ci = static_cast<std::size_t>(c);
      lo[vi] = std::min(lo[vi], lo[ci]);
      hi[vi] = std::max(hi[vi], hi[ci]);
      size[vi] += size[ci];
    }
    if (hi[vi] - lo[vi] + 1 != size[vi]) return false;
  }
  return true;
}

RootedTree reorder_to(const RootedTree& t, const Permutation& pi) {
  if (!is_consistent(t, pi)) throw Error(Errc::invalid_argument, pi.to_string() + " is not a leaf order of the tree");
  const auto pos = pi.inverse();
  const auto count = static_cast<std::size_t>(t.node_count());
  std::vector<int> first(count);
  std::vector<RootedTree::Node> nodes(count);
  for (NodeId v : t.postorder()) {
    const auto vi = static_cast<std::size_t>(v);
    if (t.is_leaf(v)) {
      first[vi] = pos[static_cast<std::size_t>(t.label(v))];
      nodes[vi].label = t.label(v);
      continue;
    }
    auto ch = std::vector<NodeId>(t.children(v).begin(), t.children(v).end());
    std::sort(ch.begin(), ch.end(), [&](NodeId a, NodeId b) {
      return first[static_cast<std::size_t>(a)] < first[static_cast<std::size_t>(b)];
    });
    first[vi] = first[static_cast<std::size_t>(ch.front())];
    nodes[vi].children = std::move(ch);
  }
  return RootedTree(std::move(nodes), t.root());
}

std::uint64_t count_orders(const RootedTree& t) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    for (std::uint64_t f = 2; f <= t.children(v).size(); ++f) {
      if (total > kMax / f) return kMax;
      total *= f;
    }
  }
  return total;
}

OrderEnumerator::OrderEnumerator(const RootedTree& t, std::uint64_t cap) : tree_(&t) {
  const auto total = count_orders(t);
  if (total > cap) {
    throw Error(Errc::cap_exceeded, "tree has " + std::to_string(total) + " leaf orders, cap is " + std::to_string(cap));
  }
  for (NodeId v : t.preorder()) {
    if (t.is_leaf(v)) continue;
    internal_.push_back(v);
    std::vector<int> order(t.children(v).size());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<int>(c);
    child_order_.push_back(std::move(order));
  }
}

std::optional<Permutation> OrderEnumerator::next() {
  if (done_) return std::nullopt;
  Permutation out = emit();
  done_ = !advance();
  return out;
}

Permutation OrderEnumerator::emit() const {
  std::vector<int> slot(static_cast<std::size_t>(tree_->node_count()), -1);
  for (std::size_t s = 0; s < internal_.size(); ++s) slot[static_cast<std::size_t>(internal_[s])] = static_cast<int>(s);
  std::vector<int> leaves;
  leaves.reserve(static_cast<std::size_t>(tree_->leaf_count()));
  std::vector<NodeId> stack{tree_->root()};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (tree_->is_leaf(v)) {
      leaves.push_back(tree_->label(v));
      continue;
    }
    const auto& order = child_order_[static_cast<std::size_t>(slot[static_cast<std::size_t>(v)])];
    const auto ch = tree_->children(v);
    for (auto it = order.rbegin(); it != order.rend(); ++it) stack.push_back(ch[static_cast<std::size_t>(*it)]);
  }
  return Permutation(std::move(leaves));
}

bool OrderEnumerator::advance() {
  if (internal_.empty()) return false;
  if (tree_->is_binary()) {
    // Reflected Gray code: step s flips the node indexed by the lowest set bit of s.
    ++step_;
    const auto flip = static_cast<std::size_t>(std::countr_zero(step_));
    if (flip >= internal_.size()) return false;
    std::swap(child_order_[flip][0], child_order_[flip][1]);
    return true;
  }
  for (std::size_t s = internal_.size(); s-- > 0;) {
    if (std::next_permutation(child_order_[s].begin(), child_order_[s].end())) return true;
  }
  return false;
}

std::vector<Permutation> enumerate_orders(const RootedTree& t, std::uint64_t cap) {
  OrderEnumerator it(t, cap);
  std::vector<Permutation> out;
  while (auto pi = it.next()) out.push_back(std::move(*pi));
  return out;
}

}  // namespace tangle
