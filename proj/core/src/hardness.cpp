#include "tangle/hardness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

Permutation pad_permutation(const Permutation& pi) {
  std::vector<int> seq(pi.values().begin(), pi.values().end());
  while (!std::has_single_bit(seq.size() + 1)) {
    const int e = seq.back();
    for (int& v : seq)
      if (v > e) ++v;
    seq.push_back(e + 1);
  }
  return Permutation(std::move(seq));
}

namespace {

// Perfect binary tree over a leaf row whose length is a power of two.
RootedTree complete_over(const std::vector<int>& row) {
  TreeBuilder b;
  std::vector<NodeId> level;
  level.reserve(row.size());
  for (int label : row) level.push_back(b.leaf(label));
  while (level.size() > 1) {
    std::vector<NodeId> up;
    up.reserve(level.size() / 2);
    for (std::size_t q = 0; q < level.size(); q += 2) up.push_back(b.internal({level[q], level[q + 1]}));
    level = std::move(up);
  }
  return std::move(b).build(level.front());
}

}  // namespace

HardnessInstance build_sbt_tree(const Permutation& pi) {
  const auto m = static_cast<std::size_t>(pi.size());
  if (!std::has_single_bit(m + 1)) {
    throw Error(Errc::bad_length, "permutation length " + std::to_string(m) + " is not 2^p - 1");
  }
  std::vector<int> row{1};
  for (int v : pi.values()) {
    row.push_back(2 * v);
    row.push_back(2 * v + 1);
  }
  row.push_back(static_cast<int>(2 * (m + 1)));
  return {complete_over(row), breakpoints(pi) / 3, "permutation " + pi.to_string()};
}

Digraph parse_digraph(std::string_view text) {
  Digraph g;
  std::set<std::pair<int, int>> seen;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(start, nl - start));
    start = nl + 1;
    ++lineno;
    auto fail = [lineno](const std::string& msg) -> void {
      throw ParseError(Errc::parse_error, lineno, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    int u = 0, v = 0;
    if (!(in >> u)) {
      in.clear();
      std::string rest;
      if (in >> rest) fail("expected \"u v\"");
      continue;
    }
    std::string extra;
    if (!(in >> v) || (in >> extra)) fail("expected \"u v\"");
    if (u < 1 || v < 1) fail("vertex ids start at 1");
    if (u == v) fail("self-loop");
    if (!seen.insert({u, v}).second) fail("repeated arc");
    g.arcs.emplace_back(u, v);
    g.vertices = std::max({g.vertices, u, v});
  }
  return g;
}

Digraph read_digraph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

HardnessInstance build_hp_tree(const Digraph& g) {
  const int nv = g.vertices;
  const int ne = static_cast<int>(g.arcs.size());
  std::vector<std::vector<int>> extra(static_cast<std::size_t>(nv) + 1);
  std::set<std::pair<int, int>> seen;
  for (int j = 1; j <= ne; ++j) {
    const auto [u, v] = g.arcs[static_cast<std::size_t>(j - 1)];
    if (u < 1 || v < 1 || u > nv || v > nv) throw Error(Errc::invalid_argument, "arc endpoint outside 1..vertices");
    if (u == v) throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert({u, v}).second) throw Error(Errc::invalid_argument, "repeated arc");
    extra[static_cast<std::size_t>(u)].push_back(2 * nv + 3 * (j - 1) + 2);
    extra[static_cast<std::size_t>(v)].push_back(2 * nv + 3 * (j - 1) + 3);
  }
  if (nv == 0) throw Error(Errc::invalid_argument, "empty digraph");
  for (int i = 1; i <= nv; ++i) {
    if (extra[static_cast<std::size_t>(i)].empty()) {
      throw Error(Errc::isolated_vertex, "vertex " + std::to_string(i) + " has no arc");
    }
  }

  TreeBuilder b;
  std::vector<NodeId> c1;
  for (int i = 1; i <= nv; ++i) c1.push_back(b.leaf(2 * i - 1));
  for (int j = 1; j <= ne; ++j) c1.push_back(b.leaf(2 * nv + 3 * (j - 1) + 1));
  std::vector<NodeId> c2;
  for (int i = 1; i <= nv; ++i) {
    std::vector<NodeId> ch{b.leaf(2 * i)};
    for (int label : extra[static_cast<std::size_t>(i)]) ch.push_back(b.leaf(label));
    c2.push_back(b.internal(std::move(ch)));
  }
  const NodeId first = b.internal(std::move(c1));
  const NodeId second = b.internal(std::move(c2));
  const NodeId root = b.internal({first, second});
  const int threshold = 2 * nv + 3 * ne - 1 - (nv - 1);
  return {std::move(b).build(root), threshold,
          "digraph with " + std::to_string(nv) + " vertices and " + std::to_string(ne) + " arcs"};
}

HardnessInstance build_bp_tree(const RootedTree& t, int k) {
  TreeBuilder b;
  std::vector<NodeId> copy(static_cast<std::size_t>(t.node_count()), kNoNode);
  for (NodeId v : t.postorder()) {
    if (t.is_leaf(v)) {
      copy[static_cast<std::size_t>(v)] = b.leaf(t.label(v) + 1);
    } else {
      std::vector<NodeId> ch;
      for (NodeId c : t.children(v)) ch.push_back(copy[static_cast<std::size_t>(c)]);
      copy[static_cast<std::size_t>(v)] = b.internal(std::move(ch));
    }
  }
  const NodeId u = b.internal({b.leaf(1), b.leaf(t.leaf_count() + 2)});
  const NodeId root = b.internal({copy[static_cast<std::size_t>(t.root())], u});
  return {std::move(b).build(root), k + 2, "tree " + serialize(t) + " with k = " + std::to_string(k)};
}

Shape parse_shape(std::string_view name) {
  if (name == "binary") return Shape::binary;
  if (name == "complete") return Shape::complete;
  if (name == "arbitrary") return Shape::arbitrary;
  throw Error(Errc::invalid_argument, "unknown shape '" + std::string(name) + "'");
}

namespace {

// Uniform draws via modulo so the stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(gen_() % bound); }
  bool coin() { return (gen_() & 1U) != 0; }

  std::vector<int> shuffled(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[below(i)]);
    return labels;
  }

 private:
  std::mt19937_64 gen_;
};

struct Plane {
  std::vector<std::vector<int>> children;
  std::vector<int> parent;
  int root = 0;
};

// Remy's algorithm: grafting a new leaf onto a uniformly chosen node keeps the
// ordered shape uniform.
Plane remy(Rng& rng, int n) {
  Plane p;
  p.children.emplace_back();
  p.parent.push_back(-1);
  for (int i = 2; i <= n; ++i) {
    const int x = static_cast<int>(rng.below(p.children.size()));
    const int leaf = static_cast<int>(p.children.size());
    p.children.emplace_back();
    p.parent.push_back(-1);
    const int mid = static_cast<int>(p.children.size());
    p.children.push_back(rng.coin() ? std::vector<int>{x, leaf} : std::vector<int>{leaf, x});
    p.parent.push_back(p.parent[static_cast<std::size_t>(x)]);
    if (const int up = p.parent[static_cast<std::size_t>(x)]; up >= 0) {
      auto& ch = p.children[static_cast<std::size_t>(up)];
      *std::find(ch.begin(), ch.end(), x) = mid;
    } else {
      p.root = mid;
    }
    p.parent[static_cast<std::size_t>(x)] = mid;
    p.parent[static_cast<std::size_t>(leaf)] = mid;
  }
  return p;
}

}  // namespace

RootedTree random_instance(std::uint64_t seed, int n, Shape shape) {
  if (n < 1) throw Error(Errc::bad_shape, "a tree needs at least one leaf");
  Rng rng(seed);
  if (shape == Shape::complete) {
    if (!std::has_single_bit(static_cast<unsigned>(n))) {
      throw Error(Errc::bad_shape, "complete trees need a power-of-two leaf count, got " + std::to_string(n));
    }
    return complete_over(rng.shuffled(n));
  }

  const Plane p = remy(rng, n);
  const auto labels = rng.shuffled(n);
  TreeBuilder b;
  std::size_t next_label = 0;
  const bool contract = shape == Shape::arbitrary;
  // Children of v after contracting the chosen internal edges below it.
  std::function<void(int, std::vector<NodeId>&)> collect = [&](int v, std::vector<NodeId>& out) {
    for (int c : p.children[static_cast<std::size_t>(v)]) {
      if (p.children[static_cast<std::size_t>(c)].empty()) {
        out.push_back(b.leaf(labels[next_label++]));
      } else if (contract && rng.coin()) {
        collect(c, out);
      } else {
        std::vector<NodeId> sub;
        collect(c, sub);
        out.push_back(b.internal(std::move(sub)));
      }
    }
  };
  if (n == 1) return std::move(b).build(b.leaf(1));
  std::vector<NodeId> top;
  collect(p.root, top);
  return std::move(b).build(b.internal(std::move(top)));
}

}  // namespace tangle
