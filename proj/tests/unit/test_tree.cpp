#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/tree.hpp"

using tangle::Permutation;
using tangle::RootedTree;

namespace {

tangle::Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const tangle::Error& e) {
    return e.code();
  }
  FAIL("expected tangle::Error");
  return tangle::Errc::invalid_argument;
}

const char* kSixteen = "((((1,6),(7,2)),((3,4),(5,8))),(((9,12),(13,10)),((11,14),(15,16))));";

}  // namespace

TEST_CASE("parse") {
  const auto t = tangle::parse_tree("((1,3),(2,4));");
  CHECK(t.leaf_count() == 4);
  CHECK(t.is_binary());
  CHECK(t.is_complete_binary());

  const auto star = tangle::parse_tree("(1,2,3);");
  CHECK_FALSE(star.is_binary());
  CHECK(star.leaf_count() == 3);

  CHECK(tangle::parse_tree(" ( 1 ,\n2 ) ; ").leaf_count() == 2);
  CHECK(tangle::parse_tree("1;").leaf_count() == 1);

  try {
    tangle::parse_tree("((1,1),2);");
    FAIL("expected label-set-error");
  } catch (const tangle::Error& e) {
    CHECK(e.code() == tangle::Errc::label_set_error);
    CHECK(std::string(e.what()).find("missing: 3") != std::string::npos);
    CHECK(std::string(e.what()).find("duplicate or out of range: 1") != std::string::npos);
  }

  for (const auto& [text, offset] : std::vector<std::pair<std::string, std::size_t>>{
           {"((1,2),3)", 9}, {"(1);", 2}, {"(1,2;", 4}, {"(1,a);", 3}, {"(1,2); x", 7}, {"(0,1);", 1}}) {
    try {
      tangle::parse_tree(text);
      FAIL("expected syntax error for " << text);
    } catch (const tangle::ParseError& e) {
      CHECK(e.code() == tangle::Errc::syntax_error);
      CHECK(e.location() == offset);
    }
  }
}

TEST_CASE("serialize round-trips") {
  for (const char* text : {"((1,3),(2,4));", "1;", "(1,2,3);", "((2,(1,5)),4,3);", kSixteen}) {
    const auto t = tangle::parse_tree(text);
    CHECK(serialize(t) == text);
    CHECK(serialize(tangle::parse_tree(serialize(t))) == text);
  }
}

TEST_CASE("current_leaf_order") {
  CHECK(current_leaf_order(tangle::parse_tree("((1,3),(2,4));")) == Permutation{1, 3, 2, 4});
  CHECK(current_leaf_order(tangle::parse_tree("((2,1),(3,4));")) == Permutation{2, 1, 3, 4});
  CHECK(current_leaf_order(tangle::parse_tree(kSixteen)) ==
        Permutation{1, 6, 7, 2, 3, 4, 5, 8, 9, 12, 13, 10, 11, 14, 15, 16});
}

TEST_CASE("structure queries") {
  const auto t = tangle::parse_tree("((1,3),(2,(4,5)));");
  const auto a = t.leaf_node(1), b = t.leaf_node(3), c = t.leaf_node(5);
  CHECK(t.depth(t.root()) == 0);
  CHECK(t.depth(c) == 3);
  CHECK(t.lca(a, b) == t.parent(a));
  CHECK(t.lca(a, c) == t.root());
  CHECK(t.lca(c, c) == c);
  CHECK_FALSE(t.is_complete_binary());
  CHECK(t.leaves_under(t.parent(c)) == std::vector<int>{4, 5});
}

TEST_CASE("is_consistent") {
  const auto t = tangle::parse_tree("((1,3),(2,4));");
  CHECK(is_consistent(t, Permutation{3, 1, 4, 2}));
  CHECK_FALSE(is_consistent(t, Permutation{1, 2, 3, 4}));
  CHECK(is_consistent(t, current_leaf_order(t)));
  CHECK(code_of([&] { is_consistent(t, Permutation{1, 2, 3}); }) == tangle::Errc::length_mismatch);

  const auto r = reorder_to(t, Permutation{4, 2, 3, 1});
  CHECK(current_leaf_order(r) == Permutation{4, 2, 3, 1});
  CHECK(code_of([&] { reorder_to(t, Permutation{1, 2, 3, 4}); }) == tangle::Errc::invalid_argument);
}

TEST_CASE("enumerate_orders") {
  CHECK(enumerate_orders(tangle::parse_tree("((1,3),(2,4));")).size() == 8);
  CHECK(enumerate_orders(tangle::parse_tree("1;")) == std::vector<Permutation>{Permutation{1}});
  CHECK(enumerate_orders(tangle::parse_tree("(1,2,3);")).size() == 6);

  SUBCASE("star children come out in lexicographic child order") {
    const auto all = enumerate_orders(tangle::parse_tree("(1,2,3);"));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }

  SUBCASE("binary trees change one child flip per step") {
    const auto t = tangle::parse_tree("(((1,2),3),(4,5));");
    const auto all = enumerate_orders(t);
    CHECK(all.size() == 16);
    for (std::size_t s = 1; s < all.size(); ++s) {
      int changed = 0;
      for (int p = 1; p <= 5; ++p) changed += all[s].at(p) != all[s - 1].at(p);
      CHECK(changed >= 2);
    }
  }

  SUBCASE("cap") {
    const auto t = tangle::parse_tree("(1,2,3,4,5,6,7,8,9,10);");
    CHECK(count_orders(t) == 3628800);
    CHECK(code_of([&] { tangle::OrderEnumerator e(t); }) == tangle::Errc::cap_exceeded);
  }

  SUBCASE("matches brute force on random trees with up to 6 leaves") {
    std::mt19937_64 rng(3);
    const std::vector<std::string> shapes{"(x,x)",       "(x,x,x)",         "((x,x),x,x)",     "(x,(x,x,x))",
                                          "((x,x),(x,x))", "(x,x,x,x,x)",   "((x,x,x),(x,x,x))", "(x,((x,x),x),x)",
                                          "(((x,x),x),(x,x))"};
    for (const auto& shape : shapes) {
      const auto t = oracle::random_labeling(shape, rng);
      const int n = t.leaf_count();
      const auto all = enumerate_orders(t);
      CHECK(all.size() == count_orders(t));
      std::set<Permutation> seen(all.begin(), all.end());
      CHECK(seen.size() == all.size());
      std::set<oracle::Seq> expected;
      for (const auto& seq : oracle::leaf_orders(t)) expected.insert(seq);
      CHECK(expected.size() == all.size());
      for (const auto& seq : oracle::all_permutations(n)) {
        const bool member = is_consistent(t, Permutation(seq));
        CHECK(member == oracle::in_order_set(t, seq));
        CHECK(member == (seen.count(Permutation(seq)) == 1));
        CHECK(member == (expected.count(seq) == 1));
      }
    }
  }
}
