#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shiftpat {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based at the interface; `at(i)` is pi(i).
class Permutation {
 public:
  /// Throws std::invalid_argument unless `entries` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }
  /// pi^{-1}(value)
  int position_of(int value) const;
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Rank-relabels pairwise distinct values to 1..n. Throws std::domain_error
/// ("reduction undefined") on a repeated value.
template <typename T>
Permutation reduce(std::span<const T> values) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (!(values[order[r - 1]] < values[order[r]])) {
      throw std::domain_error("reduction undefined: repeated value");
    }
  }
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

template <typename T>
Permutation reduce(const std::vector<T>& values) {
  return reduce(std::span<const T>(values));
}

/// Positions i (1-based) with seq[i] > seq[i+1].
std::vector<int> descent_set(std::span<const int> seq);
int descent_count(std::span<const int> seq);

/// Start positions i (1-based) where the window of length |pattern| reduces to pattern.
std::vector<int> contains_consecutive(const Permutation& text, const Permutation& pattern);
bool avoids(const Permutation& text, const Permutation& pattern);

Permutation complement(const Permutation& pi);
Permutation reverse_complement(const Permutation& pi);
Permutation inverse(const Permutation& pi);

/// Disjoint cycles, each starting at its smallest element, ordered by that element.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& pi);
bool is_n_cycle(const Permutation& pi);

/// An n-cycle with one distinguished entry. The distinguished entry's value is
/// implied (it is the unique value missing from the others) and is kept
/// internally so that the full cycle is always available.
class MarkedCycle {
 public:
  /// `cycle` must be a single n-cycle; `marked_position` is 1-based.
  MarkedCycle(Permutation cycle, int marked_position);

  /// One-line form with `star` at the marked position, e.g. {5,3,6,1,7,4,star,9,2}.
  /// Throws std::invalid_argument if the invariants fail.
  static MarkedCycle from_one_line(std::span<const int> entries_with_star, int star = 0);

  int size() const { return cycle_.size(); }
  int marked_position() const { return marked_; }
  int implied_value() const { return cycle_.at(marked_); }
  const Permutation& cycle() const { return cycle_; }

  /// One-line entries with the marked entry replaced by `star`.
  std::vector<int> one_line(int star = 0) const;
  /// The non-marked entries in order.
  std::vector<int> unmarked_entries() const;

  friend bool operator==(const MarkedCycle&, const MarkedCycle&) = default;
  friend auto operator<=>(const MarkedCycle&, const MarkedCycle&) = default;

 private:
  Permutation cycle_;
  int marked_;
};

/// pi -> the cycle (pi(1), ..., pi(n)) with pi(1)'s occurrence distinguished.
MarkedCycle theta(const Permutation& pi);
Permutation theta_inv(const MarkedCycle& mc);

/// Descents of the one-line form with the marked entry deleted.
int marked_des(const MarkedCycle& mc);
/// 1 iff mc = [*,1,...] or mc = [...,n,*].
int marked_epsilon(const MarkedCycle& mc);
/// 180-degree rotation of the dot array.
MarkedCycle marked_rc(const MarkedCycle& mc);
/// Reflection of the dot array along y = x; the marked dot (i, v) goes to (v, i).
MarkedCycle marked_inverse(const MarkedCycle& mc);

/// Descent set of the one-line form with the marked entry read as 0.
std::vector<int> zeroed_descent_set(const MarkedCycle& mc);

/// Accepts "4 3 6 1 5 2", "4,3,6,1,5,2", "[4, 3, 6]" and the digits-only
/// shorthand "436152" (n <= 9). Throws ParseError.
Permutation parse_permutation(std::string_view text);
/// As parse_permutation, with exactly one `*` token.
MarkedCycle parse_marked_cycle(std::string_view text);

std::string format_permutation(const Permutation& pi);
std::string format_compact(const Permutation& pi);  // "615243"; n <= 9 only
std::string format_marked_cycle(const MarkedCycle& mc);
std::string format_zeroed(const MarkedCycle& mc);
std::string format_cycles(const std::vector<std::vector<int>>& cycles);

}  // namespace shiftpat
