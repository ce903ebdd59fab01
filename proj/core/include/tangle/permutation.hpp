#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tangle {

/// A bijection of [n] onto itself, stored as the sequence (pi_1, ..., pi_n).
///
/// Values and positions are 1-based. The sentinels 0 and n+1 of the extended
/// form only ever appear inside the breakpoint routines, never in storage.
class Permutation {
 public:
  /// Throws Error(invalid_argument) unless `elems` is a permutation of [n], n >= 1.
  explicit Permutation(std::vector<int> elems);
  Permutation(std::initializer_list<int> elems) : Permutation(std::vector<int>(elems)) {}

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(elems_.size()); }

  /// 1-based access: at(1) is the first element.
  int at(int position) const { return elems_[static_cast<std::size_t>(position - 1)]; }

  std::span<const int> values() const noexcept { return elems_; }

  /// inverse()[v] is the 1-based position of value v; index 0 is unused.
  std::vector<int> inverse() const;

  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> elems) : elems_(std::move(elems)) {}
  friend Permutation make_unchecked(std::vector<int> elems);

  std::vector<int> elems_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& pi);

/// Exchange of the adjacent segments at positions [i, j) and [j, k).
/// 1 <= i < j < k; k may be one past the end of the permutation it is applied to.
struct Transposition {
  int i;
  int j;
  int k;

  /// Throws Error(index_out_of_range) unless 1 <= i < j < k.
  Transposition(int i, int j, int k);

  int left_length() const noexcept { return j - i; }
  int right_length() const noexcept { return k - j; }

  /// The transposition as an element of Pi_n; requires k <= n + 1.
  Permutation as_permutation(int n) const;

  /// The transposition undoing this one.
  Transposition inverse() const noexcept { return {i, i + (k - j), k}; }

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

std::ostream& operator<<(std::ostream& os, const Transposition& t);

/// pi o tau(i,j,k). Throws Error(index_out_of_range) when t.k > n + 1.
Permutation apply_transposition(const Permutation& pi, const Transposition& t);

/// In-place variant over a raw 1..n sequence; no validation beyond bounds asserts.
void apply_transposition_inplace(std::span<int> seq, const Transposition& t);

/// Every transposition applicable to a permutation of length n, lexicographic in (i, j, k).
std::vector<Transposition> all_transpositions(int n);

/// Recognizes a transposition: nullopt for the identity, throws Error(invalid_argument)
/// when `pi` is neither the identity nor a single transposition.
std::optional<Transposition> as_transposition(const Permutation& pi);

int blocks(const Permutation& pi);
int breakpoints(const Permutation& pi);

/// Left elements of the breakpoint pairs of (0) * pi * (n+1), ascending; may contain 0.
std::vector<int> breakpoint_elements(const Permutation& pi);

/// Number of breakpoints a transposition adds (positive) or removes (negative).
/// Only the three boundaries the transposition touches can change.
int breakpoint_delta(std::span<const int> seq, const Transposition& t);

/// gl(pi): collapse blocks into single elements, drop a leading block starting
/// with 1 and a trailing block ending with n, renumber by rank.
/// Throws Error(identity_input) for the identity.
Permutation glue(const Permutation& pi);

/// pi (-) value: delete `value`, decrement everything larger.
/// Throws Error(value_out_of_range) unless value in [n] and n >= 2.
Permutation remove(const Permutation& pi, int value);

/// The companion transposition over [n-1] for a step of a sorting sequence after an
/// element is deleted. `position` is where the deleted element sits *before* `t` is
/// applied; the result is t (-) position, read as a permutation of [n]. Returns
/// nullopt when that collapses to the identity.
std::optional<Transposition> remove_from_transposition(const Transposition& t, int position, int n);

/// Move x directly behind x-1 (to the front if x = 1).
Permutation adjbef(const Permutation& pi, int x);
/// Move x directly in front of x+1 (to the end if x = n).
Permutation adjaft(const Permutation& pi, int x);

/// The single transposition realising adjbef / adjaft, or nullopt if the shift is a no-op.
std::optional<Transposition> adjbef_transposition(const Permutation& pi, int x);
std::optional<Transposition> adjaft_transposition(const Permutation& pi, int x);

/// max(ceil((blocks - 1) / 3), ceil(bp / 3)).
int transposition_lower_bound(const Permutation& pi);

}  // namespace tangle
