#include <regex>

#include "doctest.h"
#include "tangle/error.hpp"
#include "tangle/fpt.hpp"
#include "tangle/render.hpp"

using tangle::Permutation;
using tangle::Witness;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++hits;
  return hits;
}

// Every element is closed, in nesting order.
bool balanced(const std::string& svg) {
  const std::regex tag(R"(<(/?)([a-z]+)[^>]*?(/?)>)");
  std::vector<std::string> open;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      if (open.empty() || open.back() != m[2]) return false;
      open.pop_back();
    } else {
      open.push_back(m[2]);
    }
  }
  return open.empty();
}

}  // namespace

TEST_CASE("identity witness") {
  const auto t = tangle::parse_tree("((1,2),(3,4));");
  const auto svg = tangle::render_svg(t, {Permutation::identity(4), {}});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "class=\"crossing\"") == 0);
  CHECK(count(svg, "<polyline class=\"edge\"") == 4);
  CHECK(balanced(svg));
}

TEST_CASE("one crossing") {
  const auto t = tangle::parse_tree("(1,2);");
  const Witness w{Permutation{2, 1}, {{1, 2, 3}}};
  const auto svg = tangle::render_svg(t, w);
  CHECK(count(svg, "class=\"crossing\"") == 1);
  CHECK(count(svg, "class=\"band\"") == 2);
  CHECK(balanced(svg));
  CHECK(svg == tangle::render_svg(t, w));
}

TEST_CASE("columns follow the sequence length") {
  const auto t = tangle::parse_tree("(((1,4),(6,2)),((3,7),5));");
  const auto w = tangle::solve_optimal(t, 4);
  REQUIRE(w);
  const auto svg = tangle::render_svg(t, *w);
  CHECK(count(svg, "class=\"crossing\"") == w->sequence.size());
  CHECK(count(svg, "class=\"band\"") == 2 * w->sequence.size());
  CHECK(balanced(svg));
}

TEST_CASE("invalid witness") {
  const auto t = tangle::parse_tree("((1,3),(2,4));");
  CHECK_THROWS_AS(tangle::render_svg(t, {Permutation{1, 2, 3, 4}, {}}), tangle::Error);
  CHECK_THROWS_AS(tangle::render_svg(t, {Permutation{1, 3, 2, 4}, {}}), tangle::Error);
  CHECK_THROWS_AS(tangle::render_svg(t, {Permutation{1, 2, 3}, {}}), tangle::Error);
  try {
    tangle::render_svg(t, {Permutation{1, 3, 2, 4}, {}});
  } catch (const tangle::Error& e) {
    CHECK(e.code() == tangle::Errc::invalid_witness);
  }
}
