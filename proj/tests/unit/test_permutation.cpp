#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/permutation.hpp"

using tangle::Errc;
using tangle::Permutation;
using tangle::Transposition;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const tangle::Error& e) {
    return e.code();
  }
  FAIL("expected tangle::Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("construction validates the bijection") {
  CHECK_NOTHROW(Permutation{3, 1, 2});
  CHECK(code_of([] { Permutation{1, 1, 2}; }) == Errc::invalid_argument);
  CHECK(code_of([] { Permutation{0, 1}; }) == Errc::invalid_argument);
  CHECK(code_of([] { Permutation(std::vector<int>{}); }) == Errc::invalid_argument);
  CHECK(code_of([] { Transposition(2, 2, 3); }) == Errc::index_out_of_range);
  CHECK(code_of([] { Transposition(0, 1, 3); }) == Errc::index_out_of_range);
}

TEST_CASE("apply_transposition") {
  CHECK(apply_transposition(Permutation{5, 1, 2, 3, 4, 6}, {2, 4, 6}) == Permutation{5, 3, 4, 1, 2, 6});
  CHECK(apply_transposition(Permutation{1, 2, 3}, {1, 2, 3}) == Permutation{2, 1, 3});
  CHECK(code_of([] { apply_transposition(Permutation{1, 2, 3}, {1, 2, 5}); }) == Errc::index_out_of_range);

  SUBCASE("matches the position-map oracle on every permutation of 5") {
    for (const auto& seq : oracle::all_permutations(5)) {
      const Permutation pi(seq);
      CHECK(apply_transposition(apply_transposition(pi, {1, 2, 3}), {1, 2, 3}) == pi);
      for (const auto& t : tangle::all_transpositions(5)) {
        const auto out = apply_transposition(pi, t);
        REQUIRE(oracle::to_seq(out) == oracle::apply_tau(seq, t.i, t.j, t.k));
        CHECK(apply_transposition(out, t.inverse()) == pi);
        CHECK(breakpoints(out) - breakpoints(pi) == breakpoint_delta(pi.values(), t));
      }
    }
  }
}

TEST_CASE("blocks and breakpoints") {
  const Permutation example{3, 1, 2, 8, 9, 4, 5, 6, 7, 10};
  CHECK(blocks(example) == 5);
  CHECK(blocks(Permutation::identity(6)) == 1);
  CHECK(blocks(Permutation{2, 1}) == 2);
  CHECK(breakpoints(Permutation::identity(4)) == 0);
  CHECK(breakpoints(Permutation{2, 1}) == 3);
  CHECK(breakpoints(example) == 5);
  CHECK(breakpoint_elements(Permutation::identity(3)).empty());
  CHECK(breakpoint_elements(Permutation{2, 1}) == std::vector<int>{0, 1, 2});
  CHECK(breakpoint_elements(Permutation{1, 3, 2, 4}) == std::vector<int>{1, 2, 3});

  for (int n = 1; n <= 6; ++n) {
    for (const auto& seq : oracle::all_permutations(n)) {
      const Permutation pi(seq);
      const int bp = breakpoints(pi);
      const int b = blocks(pi);
      CHECK(bp == oracle::count_breakpoints(seq));
      CHECK(b == oracle::count_blocks(seq));
      CHECK((bp == 0) == pi.is_identity());
      CHECK((b == 1) == pi.is_identity());
      CHECK(std::abs(bp - b) <= 1);
      CHECK(bp == b - 1 + (pi.at(1) != 1) + (pi.at(n) != n));
      CHECK(static_cast<int>(breakpoint_elements(pi).size()) == bp);
      for (const auto& t : tangle::all_transpositions(n)) {
        const auto out = apply_transposition(pi, t);
        CHECK(std::abs(breakpoints(out) - bp) <= 3);
        CHECK(std::abs(blocks(out) - b) <= 3);
      }
    }
  }
}

TEST_CASE("glue") {
  CHECK(glue(Permutation{3, 1, 2, 8, 9, 4, 5, 6, 7, 10}) == Permutation{2, 1, 4, 3});
  CHECK(glue(Permutation{2, 1}) == Permutation{2, 1});
  CHECK(glue(Permutation{1, 3, 2, 4}) == Permutation{2, 1});
  CHECK(code_of([] { glue(Permutation::identity(3)); }) == Errc::identity_input);
  for (int n = 2; n <= 6; ++n)
    for (const auto& seq : oracle::all_permutations(n)) {
      const Permutation pi(seq);
      if (pi.is_identity()) continue;
      const auto g = glue(pi);
      CHECK(g.size() == breakpoints(pi) - 1);
      CHECK(breakpoints(g) == breakpoints(pi));
    }
}

TEST_CASE("remove") {
  CHECK(remove(Permutation{3, 1, 2}, 1) == Permutation{2, 1});
  CHECK(remove(Permutation{1, 2, 3}, 2) == Permutation{1, 2});
  CHECK(remove(Permutation{3, 1, 2}, 3) == Permutation{1, 2});
  CHECK(code_of([] { remove(Permutation{1, 2}, 3); }) == Errc::value_out_of_range);
  CHECK(code_of([] { remove(Permutation{1}, 1); }) == Errc::value_out_of_range);
}

TEST_CASE("remove_from_transposition") {
  auto r = tangle::remove_from_transposition({1, 2, 3}, 3, 3);
  REQUIRE(r);
  CHECK(*r == Transposition(1, 2, 3));
  CHECK_FALSE(tangle::remove_from_transposition({1, 2, 3}, 1, 2));

  SUBCASE("a position outside the moved range only shifts indices") {
    auto shifted = tangle::remove_from_transposition({2, 3, 5}, 1, 6);
    REQUIRE(shifted);
    CHECK(*shifted == Transposition(1, 2, 4));
    auto same = tangle::remove_from_transposition({1, 3, 4}, 6, 6);
    REQUIRE(same);
    CHECK(*same == Transposition(1, 3, 4));
  }
}

TEST_CASE("simulation identity for deletions, n <= 5, two steps") {
  for (int n = 2; n <= 5; ++n) {
    const auto moves = tangle::all_transpositions(n);
    for (const auto& seq : oracle::all_permutations(n)) {
      const Permutation pi(seq);
      for (int i = 1; i <= n; ++i) {
        const int value = pi.at(i);
        for (std::size_t a = 0; a <= moves.size(); ++a) {
          for (std::size_t b = 0; b <= (a < moves.size() ? moves.size() : 0); ++b) {
            std::vector<Transposition> steps;
            if (a < moves.size()) steps.push_back(moves[a]);
            if (b < moves.size()) steps.push_back(moves[b]);
            Permutation lhs = pi;
            Permutation rhs = remove(pi, value);
            for (const auto& t : steps) {
              const int position = lhs.inverse()[static_cast<std::size_t>(value)];
              if (auto u = tangle::remove_from_transposition(t, position, n)) rhs = apply_transposition(rhs, *u);
              lhs = apply_transposition(lhs, t);
            }
            REQUIRE(remove(lhs, value) == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("adjbef and adjaft") {
  CHECK(adjbef(Permutation{2, 4, 1, 3}, 2) == Permutation{4, 1, 2, 3});
  CHECK(adjbef(Permutation{2, 1, 3}, 1) == Permutation{1, 2, 3});
  CHECK(adjbef(Permutation{3, 1, 2}, 2) == Permutation{3, 1, 2});
  CHECK(adjaft(Permutation{2, 4, 1, 3}, 2) == Permutation{4, 1, 2, 3});
  CHECK(adjaft(Permutation{1, 3, 2}, 3) == Permutation{1, 2, 3});
  CHECK(adjaft(Permutation{3, 1, 2}, 1) == Permutation{3, 1, 2});
  CHECK_FALSE(adjbef_transposition(Permutation{3, 1, 2}, 2));
  CHECK(code_of([] { adjbef(Permutation{2, 1}, 3); }) == Errc::value_out_of_range);

  for (int n = 2; n <= 6; ++n)
    for (const auto& seq : oracle::all_permutations(n)) {
      const Permutation pi(seq);
      for (int x = 1; x <= n; ++x) {
        for (bool before : {true, false}) {
          const auto out = before ? adjbef(pi, x) : adjaft(pi, x);
          CHECK(breakpoints(out) <= breakpoints(pi));
          // Brute-force reinsertion: x sits right after x-1 (or first) / right before x+1 (or last).
          const auto inv = out.inverse();
          if (before) CHECK(inv[x] == (x == 1 ? 1 : inv[x - 1] + 1));
          else CHECK(inv[x] == (x == n ? n : inv[x + 1] - 1));
          CHECK(remove(out, x) == remove(pi, x));
          if (before && out != pi && !out.is_identity()) CHECK(glue(out) == glue(remove(pi, x)));
        }
      }
    }
}

TEST_CASE("transposition_lower_bound") {
  CHECK(transposition_lower_bound(Permutation::identity(5)) == 0);
  CHECK(transposition_lower_bound(Permutation{2, 1}) == 1);
  CHECK(transposition_lower_bound(Permutation{3, 2, 1}) == 2);
}

TEST_CASE("as_transposition recognizes exactly the transpositions") {
  CHECK_FALSE(as_transposition(Permutation::identity(4)));
  for (const auto& t : tangle::all_transpositions(5)) CHECK(*as_transposition(t.as_permutation(5)) == t);
  CHECK(code_of([] { as_transposition(Permutation{3, 2, 1}); }) == Errc::invalid_argument);
}
