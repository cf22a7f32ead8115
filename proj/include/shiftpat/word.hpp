#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shiftpat/exact_int.hpp"
#include "shiftpat/permutation.hpp"

namespace shiftpat {

using Symbol = int;

/// A finite word over {0..alphabet_size-1}.
class FiniteWord {
 public:
  FiniteWord(int alphabet_size, std::vector<Symbol> symbols);

  int alphabet_size() const { return alphabet_size_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  /// 1-based.
  Symbol at(int position) const { return symbols_[static_cast<std::size_t>(position - 1)]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  int alphabet_size_;
  std::vector<Symbol> symbols_;
};

/// The infinite word preperiod . period^inf over {0..alphabet_size-1}, held in
/// normal form: the period is primitive and the preperiod is as short as
/// possible. Two words are equal iff their normal forms are identical.
class EventuallyPeriodicWord {
 public:
  /// Throws std::invalid_argument on an empty period or an out-of-range symbol.
  EventuallyPeriodicWord(int alphabet_size, std::vector<Symbol> preperiod,
                         std::vector<Symbol> period);

  /// x^inf
  static EventuallyPeriodicWord constant(int alphabet_size, Symbol x);

  int alphabet_size() const { return alphabet_size_; }
  std::span<const Symbol> preperiod() const { return preperiod_; }
  std::span<const Symbol> period() const { return period_; }

  /// w_i, 1-based.
  Symbol at(std::int64_t position) const {
    const auto i = static_cast<std::size_t>(position - 1);
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  /// Distinct symbols occurring anywhere in the word.
  int distinct_symbols() const;

  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  int alphabet_size_;
  std::vector<Symbol> preperiod_;
  std::vector<Symbol> period_;
};

/// Left shift by k-1: suffix(w, 1) == w.
EventuallyPeriodicWord suffix(const EventuallyPeriodicWord& w, std::int64_t k);

/// Exact lexicographic order of two infinite words. Only symbol values are
/// compared, so the alphabet sizes may differ.
std::strong_ordering compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b);

/// Lexicographic order of w_[i,inf) and w_[j,inf) without materialising the suffixes.
std::strong_ordering compare_suffixes(const EventuallyPeriodicWord& w, std::int64_t i,
                                      std::int64_t j);

/// The order pattern of the first n suffixes; std::nullopt when two coincide.
std::optional<Permutation> pat(const EventuallyPeriodicWord& w, int n);

bool is_primitive(std::span<const Symbol> word);
inline bool is_primitive(const FiniteWord& word) { return is_primitive(word.symbols()); }

int mobius(std::int64_t d);

/// Number of primitive words of length t over an N-letter alphabet.
ExactInt psi(int alphabet_size, int length);

/// Literal syntax PRE(PER) with one digit per symbol, e.g. "10302(0)" or
/// "(01)"; for larger symbols "[1,0,12](0,11)". If `alphabet_size` is absent
/// it is taken as max symbol + 1 (at least 1). Throws ParseError.
EventuallyPeriodicWord parse_word(std::string_view text, std::optional<int> alphabet_size = {});
std::string format_word(const EventuallyPeriodicWord& w);

}  // namespace shiftpat
