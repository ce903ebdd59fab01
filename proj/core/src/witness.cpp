#include "tangle/witness.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

std::string format_witness(const Witness& w) {
  std::string out;
  for (int p = 1; p <= w.order.size(); ++p) {
    if (p > 1) out += ' ';
    out += std::to_string(w.order.at(p));
  }
  out += '\n';
  for (const auto& t : w.sequence) {
    out += std::to_string(t.i) + ' ' + std::to_string(t.j) + ' ' + std::to_string(t.k) + '\n';
  }
  return out;
}

void write_witness(std::ostream& os, const Witness& w) { os << format_witness(w); }

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError(Errc::parse_error, line, "line " + std::to_string(line) + ": " + msg);
}

std::vector<int> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<int> out;
  std::size_t p = 0;
  while (p < line.size()) {
    if (line[p] == ' ') {
      ++p;
      continue;
    }
    int value = 0;
    const auto [end, ec] = std::from_chars(line.data() + p, line.data() + line.size(), value);
    if (ec != std::errc{} || (end != line.data() + line.size() && *end != ' ')) fail(lineno, "expected an integer");
    out.push_back(value);
    p = static_cast<std::size_t>(end - line.data());
  }
  return out;
}

}  // namespace

Witness parse_witness(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) fail(1, "missing permutation line");

  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (!lines[l].empty() && lines[l].back() == '\r') fail(l + 1, "CR line ending");
  }

  const auto values = parse_ints(lines[0], 1);
  if (values.empty()) fail(1, "empty permutation");
  std::optional<Permutation> order;
  try {
    order.emplace(values);
  } catch (const Error& e) {
    fail(1, e.what());
  }

  Witness w{*order, {}};
  const int n = w.order.size();
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto ijk = parse_ints(lines[l], l + 1);
    if (ijk.size() != 3) fail(l + 1, "expected \"i j k\"");
    if (!(1 <= ijk[0] && ijk[0] < ijk[1] && ijk[1] < ijk[2])) fail(l + 1, "transposition needs 1 <= i < j < k");
    if (ijk[2] > n + 1) fail(l + 1, "transposition k exceeds n+1 = " + std::to_string(n + 1));
    w.sequence.emplace_back(ijk[0], ijk[1], ijk[2]);
  }
  return w;
}

Witness read_witness(std::istream& is) {
  const std::string text(std::istreambuf_iterator<char>(is), {});
  return parse_witness(text);
}

}  // namespace tangle
