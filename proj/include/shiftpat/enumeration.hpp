#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "shiftpat/exact_int.hpp"
#include "shiftpat/permutation.hpp"
#include "shiftpat/word.hpp"

namespace shiftpat {

// ---- closed forms and recurrences (all require n, N >= 2) -------------------

/// a_{n,2} from primitive binary words.
ExactInt count_binary(int n);

/// Permutations with minimal alphabet N ending in n (equivalently, ending in 1).
ExactInt count_h(int n, int alphabet);
ExactInt count_h_recurrence(int n, int alphabet);

/// Permutations with minimal alphabet N not ending in n.
ExactInt count_g(int n, int alphabet);
ExactInt count_g_recurrence(int n, int alphabet);

/// a_{n,N}: permutations of length n whose minimal alphabet is exactly N.
ExactInt count_a(int n, int alphabet);
/// a_{n,N} as g + h, both through their recurrences.
ExactInt count_a_recurrence(int n, int alphabet);

struct RecurrenceSolution {
  std::vector<ExactInt> unrolled;  // index 0 is N = 2
  std::vector<ExactInt> closed;
};

/// Solves r_N = b_N - sum_{j=1}^{N-2} C(n+j-1, j) r_{N-j} for N = 2..(b.size()+1)
/// both by unrolling and by r_N = sum_{i=0}^{N-2} (-1)^i C(n, i) b_{N-i}.
/// `b[0]` is b_2.
RecurrenceSolution solve_recurrence(int n, const std::vector<ExactInt>& b);

// ---- exhaustive enumeration ---------------------------------------------------

struct Parallelism {
  unsigned threads = 1;
};

/// Default bound for sweeps over S_n.
inline constexpr int kDefaultEnumerationBound = 9;

struct PatternCell {
  ExactInt count = 0;
  std::optional<std::vector<Permutation>> members;  // lexicographic
};

/// Stratification of S_n by minimal alphabet size.
struct PatternRow {
  int n = 0;
  std::map<int, PatternCell> cells;  // N -> cell

  ExactInt total() const;
};

/// Sweeps S_n with n_min. Throws BoundExceeded when n > bound.
PatternRow enumerate_by_nmin(int n, Parallelism par = {}, bool keep_members = false,
                             int bound = kDefaultEnumerationBound);

/// Rows (n, N) -> a_{n,N} for 2 <= n <= n_max, from the closed form.
struct PatternTable {
  int n_max = 0;
  std::map<std::pair<int, int>, PatternCell> cells;
};

PatternTable closed_form_table(int n_max);

// ---- word-based oracle --------------------------------------------------------

/// Calls `visit` for every word u p^{n-1} x^inf with |u| + |p| = n - 1,
/// |p| >= 1, x in {0, N-1}. No primitivity filter.
void for_each_oracle_word(int n, int alphabet,
                          const std::function<void(const EventuallyPeriodicWord&)>& visit);

/// Every pattern of length n realized by some oracle-family word over N
/// letters. Uses only word comparison, never the n_min formula.
std::set<Permutation> oracle_allowed(int n, int alphabet, Parallelism par = {});

/// Formula-free spot check: every pattern of length n realized by a word
/// pre x^inf with |pre| <= max_preperiod over N letters.
std::set<Permutation> eventually_constant_allowed(int n, int alphabet, int max_preperiod);

std::set<Permutation> forbidden(int n, int alphabet, Parallelism par = {});

/// Forbidden patterns of length n all of whose proper consecutive windows are allowed.
std::set<Permutation> minimal_forbidden(int n, int alphabet, Parallelism par = {});

/// The six permutations of length n >= 3 that need n-1 symbols.
std::set<Permutation> extremal_sextet(int n);
/// The marked cycles behind extremal_sextet, in the order
/// sigma, sigma^rc, sigma^-1, (sigma^-1)^rc, tau, tau^rc.
std::vector<MarkedCycle> extremal_marked_cycles(int n);

// ---- Omega / Theta census -----------------------------------------------------

/// Counts over Omega_{n,N} = { u p^{n-1} 0^inf : |u|+|p| = n-1, p primitive }
/// split by j = N - N(pat(w, n)), plus the words whose pattern is undefined.
/// Theta_{n,N} is the sub-family whose pattern ends in 1.
struct OmegaCensus {
  int n = 0;
  int alphabet = 0;
  ExactInt omega_size = 0;
  ExactInt undefined = 0;
  std::map<int, ExactInt> bucket;        // j -> |{w : N(pi) = N - j}|
  std::map<int, ExactInt> theta_bucket;  // j -> same, restricted to pi(n) = 1
  ExactInt theta_size = 0;
  /// Every defined word decomposes as base_assignment(pi) + c along the
  /// required chain with 0 <= c_1 <= ... <= c_{n-1} <= j, and (pi, c) is unique.
  bool decomposition_ok = true;
};

OmegaCensus omega_census(int n, int alphabet);

struct OmegaExpectation {
  ExactInt omega_size;
  ExactInt undefined;
  std::map<int, ExactInt> bucket;
  std::map<int, ExactInt> theta_bucket;
  ExactInt theta_size;
};

/// The sizes the census must have according to the counting identities.
OmegaExpectation omega_expectation(int n, int alphabet);

}  // namespace shiftpat
