#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/hardness.hpp"
#include "tangle/sbt.hpp"

using tangle::Permutation;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

std::vector<int> sorted_leaves(const tangle::RootedTree& t, tangle::NodeId v) {
  auto out = t.leaves_under(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pad_permutation") {
  CHECK(tangle::pad_permutation(Permutation{3, 1, 2, 4, 6, 5, 7}) == Permutation{3, 1, 2, 4, 6, 5, 7});
  CHECK(tangle::pad_permutation(Permutation{2, 1}) == Permutation{3, 1, 2});
  CHECK(tangle::pad_permutation(Permutation{1}) == Permutation{1});
  const auto padded = tangle::pad_permutation(Permutation{1, 3, 2, 4, 5});
  CHECK(padded.size() == 7);
  CHECK(glue(padded) == glue(Permutation{1, 3, 2, 4, 5}));

  for (int n = 1; n <= 8; ++n) {
    for (const auto& seq : oracle::all_permutations(n)) {
      const Permutation pi(seq);
      const auto p = tangle::pad_permutation(pi);
      REQUIRE(p.is_identity() == pi.is_identity());
      if (!pi.is_identity()) REQUIRE(glue(p) == glue(pi));
      REQUIRE(p.size() < 2 * n);
      REQUIRE(breakpoints(p) == breakpoints(pi));
      if (n <= 5) REQUIRE(oracle::distance(oracle::to_seq(p)) == oracle::distance(seq));
    }
  }
}

TEST_CASE("build_sbt_tree") {
  const auto fig = tangle::build_sbt_tree(Permutation{3, 1, 2, 4, 6, 5, 7});
  CHECK(fig.tree.is_complete_binary());
  CHECK(current_leaf_order(fig.tree) == Permutation{1, 6, 7, 2, 3, 4, 5, 8, 9, 12, 13, 10, 11, 14, 15, 16});
  CHECK(serialize(fig.tree) == "((((1,6),(7,2)),((3,4),(5,8))),(((9,12),(13,10)),((11,14),(15,16))));");
  CHECK(fig.threshold == breakpoints(Permutation{3, 1, 2, 4, 6, 5, 7}) / 3);

  CHECK(current_leaf_order(tangle::build_sbt_tree(Permutation{1}).tree) == Permutation{1, 2, 3, 4});
  CHECK_THROWS_AS(tangle::build_sbt_tree(Permutation{2, 1}), tangle::Error);

  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 100; ++rep) {
    const auto pi = random_permutation(rep % 2 == 0 ? 3 : 7, rng);
    const auto inst = tangle::build_sbt_tree(pi);
    CHECK(breakpoints(current_leaf_order(inst.tree)) == breakpoints(pi));
  }

  SUBCASE("the leaf row is the unique breakpoint minimizer") {
    for (int rep = 0; rep < 20; ++rep) {
      const auto pi = random_permutation(rep % 2 == 0 ? 3 : 7, rng);
      const auto inst = tangle::build_sbt_tree(pi);
      const auto row = oracle::to_seq(current_leaf_order(inst.tree));
      const int own = oracle::count_breakpoints(row);
      for (const auto& order : oracle::leaf_orders(inst.tree)) {
        if (order != row) REQUIRE(oracle::count_breakpoints(order) > own);
      }
    }
  }
}

TEST_CASE("parse_digraph") {
  const auto g = tangle::parse_digraph("# path\n1 2\n\n2 3 # tail\n");
  CHECK(g.vertices == 3);
  CHECK(g.arcs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

  auto line_of = [](const char* text) -> std::size_t {
    try {
      tangle::parse_digraph(text);
    } catch (const tangle::ParseError& e) {
      return e.location();
    }
    return 0;
  };
  CHECK(line_of("1 2\n2 2\n") == 2);
  CHECK(line_of("1 2\n1 2\n") == 2);
  CHECK(line_of("1\n") == 1);
  CHECK(line_of("1 2 3\n") == 1);
  CHECK(line_of("\n1 x\n") == 2);
  CHECK(line_of("0 1\n") == 1);
}

TEST_CASE("build_hp_tree") {
  const auto inst = tangle::build_hp_tree({2, {{1, 2}}});
  const auto& t = inst.tree;
  CHECK(inst.threshold == 5);
  CHECK(t.leaf_count() == 7);
  const auto top = t.children(t.root());
  REQUIRE(top.size() == 2);
  CHECK(sorted_leaves(t, top[0]) == std::vector<int>{1, 3, 5});
  const auto vs = t.children(top[1]);
  REQUIRE(vs.size() == 2);
  CHECK(sorted_leaves(t, vs[0]) == std::vector<int>{2, 6});
  CHECK(sorted_leaves(t, vs[1]) == std::vector<int>{4, 7});
  CHECK(oracle::min_over_orders(t, oracle::count_blocks) == 5);
  CHECK(oracle::in_order_set(t, {3, 5, 1, 2, 6, 7, 4}));
  CHECK(oracle::count_blocks({3, 5, 1, 2, 6, 7, 4}) == 5);

  const auto back = tangle::build_hp_tree({2, {{2, 1}}});
  CHECK(oracle::min_over_orders(back.tree, oracle::count_blocks) <= back.threshold);

  const auto star = tangle::build_hp_tree({3, {{1, 2}, {1, 3}}});
  CHECK_FALSE(oracle::has_hamiltonian_path(3, {{1, 2}, {1, 3}}));
  CHECK(oracle::min_over_orders(star.tree, oracle::count_blocks) > star.threshold);
  CHECK(oracle::min_blocks_any_degree(star.tree) > star.threshold);

  CHECK_THROWS_AS(tangle::build_hp_tree({3, {{1, 2}}}), tangle::Error);
  CHECK_THROWS_AS(tangle::build_hp_tree({2, {{1, 1}, {1, 2}}}), tangle::Error);
  try {
    tangle::build_hp_tree({3, {{1, 2}}});
  } catch (const tangle::Error& e) {
    CHECK(e.code() == tangle::Errc::isolated_vertex);
  }

  SUBCASE("subset oracle matches enumeration") {
    for (const auto& arcs : std::vector<std::vector<std::pair<int, int>>>{
             {{1, 2}}, {{2, 1}}, {{1, 2}, {2, 1}}, {{1, 2}, {1, 3}}, {{1, 2}, {2, 3}}, {{3, 1}, {2, 3}}}) {
      int nv = 0;
      for (auto [u, v] : arcs) nv = std::max({nv, u, v});
      const auto h = tangle::build_hp_tree({nv, arcs});
      CHECK(oracle::min_blocks_any_degree(h.tree) == oracle::min_over_orders(h.tree, oracle::count_blocks));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto t = tangle::random_instance(seed, 2 + static_cast<int>(seed % 6), tangle::Shape::arbitrary);
      REQUIRE(oracle::min_blocks_any_degree(t) == oracle::min_over_orders(t, oracle::count_blocks));
    }
  }

  SUBCASE("Hamiltonian paths on three vertices") {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= 3; ++u)
      for (int v = 1; v <= 3; ++v)
        if (u != v) pairs.emplace_back(u, v);
    int checked = 0;
    for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
      tangle::Digraph g{3, {}};
      for (std::size_t a = 0; a < pairs.size(); ++a)
        if (mask >> a & 1u) g.arcs.push_back(pairs[a]);
      std::vector<bool> touched(4, false);
      for (auto [u, v] : g.arcs) touched[u] = touched[v] = true;
      if (!touched[1] || !touched[2] || !touched[3]) continue;
      const auto h = tangle::build_hp_tree(g);
      CHECK(h.tree.leaf_count() == 6 + 3 * static_cast<int>(g.arcs.size()));
      REQUIRE(oracle::has_hamiltonian_path(3, g.arcs) == (oracle::min_blocks_any_degree(h.tree) <= h.threshold));
      ++checked;
    }
    CHECK(checked > 40);
  }
}

TEST_CASE("build_bp_tree") {
  const auto single = tangle::build_bp_tree(tangle::parse_tree("1;"), 1);
  CHECK(single.tree.leaf_count() == 3);
  CHECK(single.threshold == 3);
  CHECK(serialize(single.tree) == "(2,(1,3));");

  auto equivalent = [](const tangle::RootedTree& t, int k) {
    const auto inst = tangle::build_bp_tree(t, k);
    const bool blocks_ok = oracle::min_over_orders(t, oracle::count_blocks) <= k;
    const bool bp_ok = oracle::min_over_orders(inst.tree, oracle::count_breakpoints) <= inst.threshold;
    return blocks_ok == bp_ok;
  };
  CHECK(equivalent(tangle::parse_tree("((1,3),(2,4));"), 3));
  CHECK(equivalent(tangle::parse_tree("(1,2,3);"), 1));

  std::mt19937_64 rng(67);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& shape : oracle::binary_shapes(n))
      for (int rep = 0; rep < 5; ++rep)
        for (int k = 1; k <= 5; ++k) REQUIRE(equivalent(oracle::random_labeling(shape, rng), k));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto t = tangle::random_instance(seed, n, tangle::Shape::arbitrary);
      for (int k = 1; k <= 5; ++k) REQUIRE(equivalent(t, k));
    }
  }
}

TEST_CASE("random_instance") {
  const auto a = tangle::random_instance(1, 4, tangle::Shape::complete);
  const auto b = tangle::random_instance(1, 4, tangle::Shape::complete);
  CHECK(serialize(a) == serialize(b));
  CHECK(a.is_complete_binary());
  CHECK_THROWS_AS(tangle::random_instance(1, 5, tangle::Shape::complete), tangle::Error);
  CHECK_THROWS_AS(tangle::random_instance(1, 0, tangle::Shape::binary), tangle::Error);
  CHECK(serialize(tangle::random_instance(3, 1, tangle::Shape::arbitrary)) == "1;");
  CHECK(tangle::parse_shape("arbitrary") == tangle::Shape::arbitrary);
  CHECK_THROWS_AS(tangle::parse_shape("star"), tangle::Error);

  bool saw_wide = false;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = tangle::random_instance(seed, 8, tangle::Shape::binary);
    CHECK(t.is_binary());
    CHECK(t.leaf_count() == 8);
    CHECK(serialize(tangle::parse_tree(serialize(t))) == serialize(t));
    const auto arb = tangle::random_instance(seed, 8, tangle::Shape::arbitrary);
    CHECK(arb.leaf_count() == 8);
    saw_wide = saw_wide || !arb.is_binary();
  }
  CHECK(saw_wide);

  SUBCASE("binary shapes are uniform") {
    std::map<std::string, int> counts;
    const int draws = 14000;
    for (int seed = 0; seed < draws; ++seed) {
      const auto t = tangle::random_instance(static_cast<std::uint64_t>(seed), 5, tangle::Shape::binary);
      std::string shape;
      for (char c : serialize(t)) shape += std::isdigit(static_cast<unsigned char>(c)) ? 'x' : c;
      ++counts[shape];
    }
    CHECK(counts.size() == 14);
    for (const auto& [shape, c] : counts) CHECK(std::abs(c - draws / 14) < 200);
  }
}
