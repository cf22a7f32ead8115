#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftpat/permutation.hpp"
#include "shiftpat/word.hpp"

namespace shiftpat {

/// Values a with i = pi^{-1}(a), j = pi^{-1}(a+1) both < n and pi(i+1) > pi(j+1).
/// Each one forces a strict inequality between w_i and w_j.
std::vector<int> a_set(const Permutation& pi);

enum class DeltaCase { none, interior, ends_with_1, ends_with_n };  // -, I, II, III

struct Delta {
  int value = 0;
  DeltaCase kind = DeltaCase::none;
};

Delta delta(const Permutation& pi);

/// Minimal alphabet size realizing pi: 1 + |A(pi)| + Delta(pi). n_min of the
/// length-1 permutation is 1.
int n_min(const Permutation& pi);

/// Same quantity through the marked cycle theta(pi): 1 + des + epsilon.
int n_min_marked(const Permutation& pi);

enum class ChainShape { interior, ends_with_1, ends_with_n };

/// What the word must do beyond position n-1 when Delta(pi) comes from case II or III.
enum class TailRequirement { none, nonincreasing_from_n_minus_1, nondecreasing_from_n_minus_1 };

/// The weak chain w_{i_1} <= ... <= w_{i_{n-1}} over positions i != n, ordered
/// by increasing pi-value, together with the gaps that must be strict.
struct RequiredChain {
  std::vector<int> order;       // positions i_1 .. i_{n-1}
  std::vector<int> strict_gaps;  // g (1-based): w_{order[g]} < w_{order[g+1]}
  ChainShape shape = ChainShape::interior;
  TailRequirement tail = TailRequirement::none;

  bool strict_after(int g) const;
};

RequiredChain required_chain(const Permutation& pi);

/// e.g. "w4<=w6<w1"
std::string format_chain(const RequiredChain& chain);

/// The forced prefix w_1 .. w_{n-1} over {0..N(pi)-1}.
FiniteWord base_assignment(const Permutation& pi);

enum class WitnessVariant { A, B, C, D, E, F };

struct WitnessSpec {
  WitnessVariant variant;
  int k = 0;  // split position, variants A and B
  int m = 0;  // repetitions of p, variants A and B
  EventuallyPeriodicWord word;
};

/// Variants whose preconditions hold for pi, in A..F order.
std::vector<WitnessVariant> applicable_variants(const Permutation& pi);

/// Witness word over exactly N(pi) symbols with pat(word, n) == pi. Without a
/// variant, A is used when pi(n-1) > pi(n) and B otherwise. `repetitions`
/// overrides m (default n-1) for A and B and must satisfy (m-1)(n-k) >= n-2.
/// Throws std::invalid_argument naming the violated condition.
WitnessSpec witness(const Permutation& pi, std::optional<WitnessVariant> variant = {},
                    std::optional<int> repetitions = {});

bool realize_check(const Permutation& pi, const EventuallyPeriodicWord& w);

char variant_name(WitnessVariant v);
/// Throws ParseError for anything other than A..F.
WitnessVariant parse_variant(std::string_view name);
const char* delta_case_name(DeltaCase c);

}  // namespace shiftpat
