#include "tangle/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tangle/error.hpp"
#include "shift.hpp"

namespace tangle {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::identity_input: return "identity-input";
    case Errc::value_out_of_range: return "value-not-in-range";
    case Errc::size_cap_exceeded: return "size-cap-exceeded";
    case Errc::syntax_error: return "syntax-error";
    case Errc::label_set_error: return "label-set-error";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::not_binary: return "not-binary";
    case Errc::not_complete_binary: return "not-complete-binary";
    case Errc::no_eligible_node: return "no-eligible-node";
    case Errc::bad_length: return "bad-length";
    case Errc::isolated_vertex: return "isolated-vertex";
    case Errc::bad_shape: return "bad-shape-for-n";
    case Errc::invalid_witness: return "invalid-witness";
    case Errc::parse_error: return "parse-error";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

Permutation make_unchecked(std::vector<int> elems) {
  return Permutation(Permutation::Unchecked{}, std::move(elems));
}

Permutation::Permutation(std::vector<int> elems) : elems_(std::move(elems)) {
  const auto n = elems_.size();
  if (n == 0) throw Error(Errc::invalid_argument, "permutation must have at least one element");
  std::vector<bool> seen(n + 1, false);
  for (int v : elems_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::invalid_argument, "not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "identity needs n >= 1");
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 1);
  return make_unchecked(std::move(elems));
}

std::vector<int> Permutation::inverse() const {
  std::vector<int> inv(elems_.size() + 1, 0);
  for (std::size_t p = 0; p < elems_.size(); ++p) inv[static_cast<std::size_t>(elems_[p])] = static_cast<int>(p + 1);
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < elems_.size(); ++p)
    if (elems_[p] != static_cast<int>(p + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
  os << '(';
  for (int p = 1; p <= pi.size(); ++p) os << (p > 1 ? "," : "") << pi.at(p);
  return os << ')';
}

Transposition::Transposition(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
  if (!(1 <= i && i < j && j < k)) {
    throw Error(Errc::index_out_of_range, "transposition needs 1 <= i < j < k, got (" + std::to_string(i) +
                                              "," + std::to_string(j) + "," + std::to_string(k) + ")");
  }
}

Permutation Transposition::as_permutation(int n) const {
  return apply_transposition(Permutation::identity(n), *this);
}

std::ostream& operator<<(std::ostream& os, const Transposition& t) {
  return os << "tau(" << t.i << ',' << t.j << ',' << t.k << ')';
}

void apply_transposition_inplace(std::span<int> seq, const Transposition& t) {
  assert(static_cast<std::size_t>(t.k) <= seq.size() + 1);
  auto first = seq.begin() + (t.i - 1);
  std::rotate(first, seq.begin() + (t.j - 1), seq.begin() + (t.k - 1));
}

Permutation apply_transposition(const Permutation& pi, const Transposition& t) {
  if (t.k > pi.size() + 1) {
    throw Error(Errc::index_out_of_range,
                "transposition k=" + std::to_string(t.k) + " exceeds n+1=" + std::to_string(pi.size() + 1));
  }
  std::vector<int> elems(pi.values().begin(), pi.values().end());
  apply_transposition_inplace(elems, t);
  return make_unchecked(std::move(elems));
}

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n + 1; ++k) out.emplace_back(i, j, k);
  return out;
}

std::optional<Transposition> as_transposition(const Permutation& pi) {
  const int n = pi.size();
  int i = 1;
  while (i <= n && pi.at(i) == i) ++i;
  if (i > n) return std::nullopt;
  const int j = pi.at(i);
  int p = i;
  while (p + 1 <= n && pi.at(p + 1) == pi.at(p) + 1) ++p;
  const int k = pi.at(p) + 1;
  if (j <= i || k <= j) throw Error(Errc::invalid_argument, pi.to_string() + " is not a transposition");
  Transposition t(i, j, k);
  if (t.as_permutation(n) != pi) throw Error(Errc::invalid_argument, pi.to_string() + " is not a transposition");
  return t;
}

int blocks(const Permutation& pi) {
  int count = 1;
  for (int p = 1; p < pi.size(); ++p)
    if (pi.at(p) + 1 != pi.at(p + 1)) ++count;
  return count;
}

int breakpoints(const Permutation& pi) {
  const int n = pi.size();
  int count = pi.at(1) != 1 ? 1 : 0;
  for (int p = 1; p < n; ++p)
    if (pi.at(p) + 1 != pi.at(p + 1)) ++count;
  if (pi.at(n) != n) ++count;
  return count;
}

std::vector<int> breakpoint_elements(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out;
  int prev = 0;
  for (int p = 1; p <= n + 1; ++p) {
    const int cur = p <= n ? pi.at(p) : n + 1;
    if (prev + 1 != cur) out.push_back(prev);
    prev = cur;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int breakpoint_delta(std::span<const int> seq, const Transposition& t) {
  const int n = static_cast<int>(seq.size());
  auto ext = [&](int p) { return p == 0 ? 0 : (p == n + 1 ? n + 1 : seq[static_cast<std::size_t>(p - 1)]); };
  auto bp = [](int a, int b) { return a + 1 != b ? 1 : 0; };
  // Extended-sequence neighbours around the three cut points.
  const int a = ext(t.i - 1), b = ext(t.i);
  const int c = ext(t.j - 1), d = ext(t.j);
  const int e = ext(t.k - 1), f = ext(t.k);
  const int before = bp(a, b) + bp(c, d) + bp(e, f);
  const int after = bp(a, d) + bp(e, b) + bp(c, f);
  return after - before;
}

Permutation glue(const Permutation& pi) {
  const int n = pi.size();
  if (pi.is_identity()) throw Error(Errc::identity_input, "gl is undefined for the identity");
  // First value of every block, in order of appearance.
  std::vector<int> heads;
  std::vector<int> tails;
  heads.push_back(pi.at(1));
  for (int p = 1; p < n; ++p) {
    if (pi.at(p) + 1 != pi.at(p + 1)) {
      tails.push_back(pi.at(p));
      heads.push_back(pi.at(p + 1));
    }
  }
  tails.push_back(pi.at(n));
  std::size_t lo = 0;
  std::size_t hi = heads.size();
  if (heads.front() == 1) ++lo;
  if (tails.back() == n) --hi;
  std::vector<int> kept(heads.begin() + static_cast<std::ptrdiff_t>(lo), heads.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : kept) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return make_unchecked(std::move(kept));
}

Permutation remove(const Permutation& pi, int value) {
  const int n = pi.size();
  if (n < 2 || value < 1 || value > n) {
    throw Error(Errc::value_out_of_range, "cannot remove " + std::to_string(value) + " from a permutation of length " +
                                              std::to_string(n));
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int v : pi.values()) {
    if (v < value) out.push_back(v);
    else if (v > value) out.push_back(v - 1);
  }
  return make_unchecked(std::move(out));
}

std::optional<Transposition> remove_from_transposition(const Transposition& t, int position, int n) {
  if (t.k > n + 1) throw Error(Errc::index_out_of_range, "transposition does not fit length " + std::to_string(n));
  if (position < 1 || position > n || n < 2) {
    throw Error(Errc::value_out_of_range, "position " + std::to_string(position) + " outside [" + std::to_string(n) + "]");
  }
  return as_transposition(remove(t.as_permutation(n), position));
}

namespace {

using detail::move_after;
using detail::move_before;

void check_element(const Permutation& pi, int x) {
  if (x < 1 || x > pi.size()) {
    throw Error(Errc::value_out_of_range, "element " + std::to_string(x) + " not in [" + std::to_string(pi.size()) + "]");
  }
}

}  // namespace

std::optional<Transposition> adjbef_transposition(const Permutation& pi, int x) {
  check_element(pi, x);
  const auto inv = pi.inverse();
  const int i = inv[static_cast<std::size_t>(x)];
  const int anchor = x == 1 ? 0 : inv[static_cast<std::size_t>(x - 1)];
  return move_after(i, anchor);
}

std::optional<Transposition> adjaft_transposition(const Permutation& pi, int x) {
  check_element(pi, x);
  const int n = pi.size();
  const auto inv = pi.inverse();
  const int i = inv[static_cast<std::size_t>(x)];
  const int anchor = x == n ? n + 1 : inv[static_cast<std::size_t>(x + 1)];
  return move_before(i, anchor);
}

Permutation adjbef(const Permutation& pi, int x) {
  auto t = adjbef_transposition(pi, x);
  return t ? apply_transposition(pi, *t) : pi;
}

Permutation adjaft(const Permutation& pi, int x) {
  auto t = adjaft_transposition(pi, x);
  return t ? apply_transposition(pi, *t) : pi;
}

int transposition_lower_bound(const Permutation& pi) {
  const int by_blocks = (blocks(pi) - 1 + 2) / 3;
  const int by_bp = (breakpoints(pi) + 2) / 3;
  return std::max(by_blocks, by_bp);
}

}  // namespace tangle
