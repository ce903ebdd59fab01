#include "tangle/sbt.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "shift.hpp"
#include "tangle/error.hpp"

namespace tangle {

namespace {

// Block decomposition of a sequence with the leading/trailing blocks that gl drops.
struct BlockView {
  std::vector<int> starts;  // 1-based start position of every block
  std::vector<int> heads;   // first value of every block
  std::size_t lo = 0;       // first kept block
  std::size_t hi = 0;       // one past the last kept block
  int n = 0;

  explicit BlockView(std::span<const int> seq) : n(static_cast<int>(seq.size())) {
    for (int p = 1; p <= n; ++p) {
      const int v = seq[static_cast<std::size_t>(p - 1)];
      if (p == 1 || seq[static_cast<std::size_t>(p - 2)] + 1 != v) {
        starts.push_back(p);
        heads.push_back(v);
      }
    }
    hi = heads.size();
    if (heads.front() == 1) lo = 1;
    if (seq.back() == n && hi > lo) --hi;
  }

  int glued_size() const { return static_cast<int>(hi - lo); }

  // Position in the full sequence where glued position q (1..m+1) begins.
  int start_of(int q) const {
    const std::size_t b = lo + static_cast<std::size_t>(q - 1);
    return b < starts.size() ? starts[b] : n + 1;
  }

  Transposition lift(const Transposition& t) const { return {start_of(t.i), start_of(t.j), start_of(t.k)}; }

  // gl(seq) as a raw sequence: kept blocks renumbered by the rank of their head.
  std::vector<int> glued() const {
    std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t b = lo; b < hi; ++b) rank[static_cast<std::size_t>(heads[b])] = 1;
    int r = 0;
    for (auto& x : rank) {
      if (x) x = ++r;
    }
    std::vector<int> out;
    out.reserve(hi - lo);
    for (std::size_t b = lo; b < hi; ++b) out.push_back(rank[static_cast<std::size_t>(heads[b])]);
    return out;
  }
};

bool is_sorted_seq(std::span<const int> seq) {
  for (std::size_t p = 0; p < seq.size(); ++p)
    if (seq[p] != static_cast<int>(p + 1)) return false;
  return true;
}

// Permutations of up to 16 elements packed four bits per position.
using Packed = std::uint64_t;

constexpr Packed low_mask(int bits) { return bits >= 64 ? ~Packed{0} : (Packed{1} << bits) - 1; }

Packed pack(std::span<const int> seq) {
  Packed out = 0;
  for (std::size_t p = 0; p < seq.size(); ++p) out |= Packed(seq[p] - 1) << (4 * p);
  return out;
}

Packed apply_packed(Packed x, const Transposition& t) {
  const int a = 4 * (t.i - 1);
  const int b = 4 * (t.j - 1);
  const int c = 4 * (t.k - 1);
  const Packed low = x & low_mask(a);
  const Packed high = x & ~low_mask(c);
  const Packed left = (x >> a) & low_mask(b - a);
  const Packed right = (x >> b) & low_mask(c - b);
  return low | (right << a) | (left << (a + c - b)) | high;
}

bool depth_limited(std::vector<int>& seq, int bp, int remaining, const std::vector<Transposition>& moves,
                   std::vector<Transposition>& path) {
  if (bp == 0) return true;
  if (remaining == 0 || bp > 3 * remaining) return false;
  for (const auto& t : moves) {
    const int next_bp = bp + breakpoint_delta(seq, t);
    if (next_bp > 3 * (remaining - 1)) continue;
    apply_transposition_inplace(seq, t);
    path.push_back(t);
    if (depth_limited(seq, next_bp, remaining - 1, moves, path)) return true;
    path.pop_back();
    apply_transposition_inplace(seq, t.inverse());
  }
  return false;
}

}  // namespace

std::vector<Transposition> expand_glued_sequence(const Permutation& pi, std::span<const Transposition> glued) {
  if (glued.empty()) return {};
  // The glued elements stay the blocks of the *original* permutation even when a
  // later arrangement happens to merge some of them.
  const BlockView view(pi.values());
  const int m = view.glued_size();
  const int lead = view.lo == 1 ? view.starts[1] - 1 : 0;
  std::vector<int> order = view.glued();
  std::vector<int> length(static_cast<std::size_t>(m) + 1);
  for (std::size_t b = view.lo; b < view.hi; ++b) {
    const int next_start = b + 1 < view.starts.size() ? view.starts[b + 1] : pi.size() + 1;
    length[static_cast<std::size_t>(order[b - view.lo])] = next_start - view.starts[b];
  }
  std::vector<int> start(static_cast<std::size_t>(m) + 2);
  std::vector<Transposition> out;
  out.reserve(glued.size());
  for (const auto& t : glued) {
    if (t.k > m + 1) throw Error(Errc::index_out_of_range, "glued transposition does not fit the glued permutation");
    start[1] = lead + 1;
    for (int q = 1; q <= m; ++q)
      start[static_cast<std::size_t>(q + 1)] =
          start[static_cast<std::size_t>(q)] + length[static_cast<std::size_t>(order[static_cast<std::size_t>(q - 1)])];
    out.emplace_back(start[static_cast<std::size_t>(t.i)], start[static_cast<std::size_t>(t.j)],
                     start[static_cast<std::size_t>(t.k)]);
    apply_transposition_inplace(order, t);
  }
  return out;
}

SortResult exact_distance(const Permutation& pi, int cap) {
  if (pi.is_identity()) return {};
  const Permutation g = glue(pi);
  const int m = g.size();
  if (m > cap || m > 16) {
    throw Error(Errc::size_cap_exceeded,
                "glued permutation has " + std::to_string(m) + " elements, cap is " + std::to_string(std::min(cap, 16)));
  }
  const auto moves = all_transpositions(m);
  std::vector<int> id(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) id[static_cast<std::size_t>(p)] = p + 1;
  const Packed goal = pack(id);
  const Packed start = pack(g.values());

  struct Parent {
    Packed from;
    std::uint32_t move;
  };
  std::unordered_map<Packed, Parent> parent;
  parent.emplace(start, Parent{start, 0});
  std::deque<Packed> frontier{start};
  bool found = false;
  while (!frontier.empty() && !found) {
    const Packed cur = frontier.front();
    frontier.pop_front();
    for (std::uint32_t mi = 0; mi < moves.size(); ++mi) {
      const Packed next = apply_packed(cur, moves[mi]);
      if (!parent.emplace(next, Parent{cur, mi}).second) continue;
      if (next == goal) {
        found = true;
        break;
      }
      frontier.push_back(next);
    }
  }
  std::vector<Transposition> glued;
  for (Packed at = goal; at != start;) {
    const Parent& p = parent.at(at);
    glued.push_back(moves[p.move]);
    at = p.from;
  }
  std::reverse(glued.begin(), glued.end());
  return {expand_glued_sequence(pi, glued)};
}

std::optional<SortResult> fpt_sort(const Permutation& pi, int k) {
  if (pi.is_identity()) return SortResult{};
  if (k <= 0 || breakpoints(pi) > 3 * k) return std::nullopt;
  const Permutation g = glue(pi);
  const auto moves = all_transpositions(g.size());
  const int bp = breakpoints(g);
  for (int depth = (bp + 2) / 3; depth <= k; ++depth) {
    std::vector<int> seq(g.values().begin(), g.values().end());
    std::vector<Transposition> path;
    if (depth_limited(seq, bp, depth, moves, path)) return SortResult{expand_glued_sequence(pi, path)};
  }
  return std::nullopt;
}

SortResult greedy_sort(const Permutation& pi) {
  std::vector<int> cur(pi.values().begin(), pi.values().end());
  SortResult result;
  while (!is_sorted_seq(cur)) {
    const BlockView view(cur);
    const std::vector<int> sigma = view.glued();
    const int m = static_cast<int>(sigma.size());
    std::vector<int> inv(static_cast<std::size_t>(m) + 1);
    for (int p = 1; p <= m; ++p) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p - 1)])] = p;

    std::optional<Transposition> best;
    int best_delta = 1;
    auto consider = [&](const std::optional<Transposition>& t) {
      if (!t) return;
      const int delta = breakpoint_delta(sigma, *t);
      if (delta < best_delta) {
        best_delta = delta;
        best = t;
      }
    };
    for (int x = 1; x <= m; ++x) {
      const int from = inv[static_cast<std::size_t>(x)];
      consider(detail::move_after(from, x == 1 ? 0 : inv[static_cast<std::size_t>(x - 1)]));
      consider(detail::move_before(from, x == m ? m + 1 : inv[static_cast<std::size_t>(x + 1)]));
    }
    // Every element of a glued permutation sits between two breakpoints, so some
    // shift always removes at least one.
    if (!best || best_delta >= 0) throw std::logic_error("greedy_sort: no breakpoint-reducing shift");
    const Transposition lifted = view.lift(*best);
    apply_transposition_inplace(cur, lifted);
    result.sequence.push_back(lifted);
  }
  return result;
}

bool verify_sequence(const Permutation& pi, std::span<const Transposition> sequence, int k) {
  std::vector<int> cur(pi.values().begin(), pi.values().end());
  for (const auto& t : sequence) {
    if (t.k > pi.size() + 1) {
      throw Error(Errc::index_out_of_range, "transposition k=" + std::to_string(t.k) +
                                                " does not fit a permutation of length " + std::to_string(pi.size()));
    }
    apply_transposition_inplace(cur, t);
  }
  return is_sorted_seq(cur) && static_cast<int>(sequence.size()) <= k;
}

Sorter greedy_sorter() { return {"greedy", [](const Permutation& pi) { return greedy_sort(pi); }}; }

Sorter exact_sorter(int cap) {
  return {"exact", [cap](const Permutation& pi) { return exact_distance(pi, cap); }};
}

}  // namespace tangle
