#include "shiftpat/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "shiftpat/errors.hpp"

namespace shiftpat {

namespace {

void check_symbols(int alphabet_size, std::span<const Symbol> symbols) {
  for (Symbol s : symbols) {
    if (s < 0 || s >= alphabet_size) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet 0.." +
                                  std::to_string(alphabet_size - 1));
    }
  }
}

// Length of the primitive root of `word` (a divisor of its length).
std::size_t root_length(std::span<const Symbol> word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = word[i] == word[i - d];
    if (repeats) return d;
  }
  return n;
}

}  // namespace

FiniteWord::FiniteWord(int alphabet_size, std::vector<Symbol> symbols)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
  if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  check_symbols(alphabet_size_, symbols_);
}

EventuallyPeriodicWord::EventuallyPeriodicWord(int alphabet_size, std::vector<Symbol> preperiod,
                                               std::vector<Symbol> period)
    : alphabet_size_(alphabet_size), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  check_symbols(alphabet_size_, preperiod_);
  check_symbols(alphabet_size_, period_);

  period_.resize(root_length(period_));
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

EventuallyPeriodicWord EventuallyPeriodicWord::constant(int alphabet_size, Symbol x) {
  return EventuallyPeriodicWord(alphabet_size, {}, {x});
}

int EventuallyPeriodicWord::distinct_symbols() const {
  std::set<Symbol> s(preperiod_.begin(), preperiod_.end());
  s.insert(period_.begin(), period_.end());
  return static_cast<int>(s.size());
}

EventuallyPeriodicWord suffix(const EventuallyPeriodicWord& w, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("suffix index must be >= 1");
  const auto pre = w.preperiod();
  const auto per = w.period();
  const auto drop = static_cast<std::size_t>(k - 1);
  if (drop <= pre.size()) {
    return EventuallyPeriodicWord(w.alphabet_size(), {pre.begin() + static_cast<std::ptrdiff_t>(drop), pre.end()},
                                  {per.begin(), per.end()});
  }
  std::vector<Symbol> rotated(per.begin(), per.end());
  const auto shift = (drop - pre.size()) % per.size();
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift), rotated.end());
  return EventuallyPeriodicWord(w.alphabet_size(), {}, std::move(rotated));
}

std::strong_ordering compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
  const auto la = static_cast<std::int64_t>(a.period().size());
  const auto lb = static_cast<std::int64_t>(b.period().size());
  const std::int64_t bound = static_cast<std::int64_t>(a.preperiod().size()) +
                             static_cast<std::int64_t>(b.preperiod().size()) + std::lcm(la, lb);
  for (std::int64_t i = 1; i <= bound; ++i) {
    if (auto c = a.at(i) <=> b.at(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_suffixes(const EventuallyPeriodicWord& w, std::int64_t i,
                                      std::int64_t j) {
  if (i == j) return std::strong_ordering::equal;
  // Past the preperiod both suffixes run through the same period.
  const std::int64_t bound = static_cast<std::int64_t>(w.preperiod().size()) +
                             static_cast<std::int64_t>(w.period().size());
  for (std::int64_t p = 0; p < bound; ++p) {
    if (auto c = w.at(i + p) <=> w.at(j + p); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::optional<Permutation> pat(const EventuallyPeriodicWord& w, int n) {
  if (n < 1) throw std::invalid_argument("pattern length must be >= 1");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return compare_suffixes(w, a, b) < 0; });
  std::vector<int> ranks(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && compare_suffixes(w, order[r - 1], order[r]) == 0) return std::nullopt;
    ranks[static_cast<std::size_t>(order[r] - 1)] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

bool is_primitive(std::span<const Symbol> word) {
  if (word.empty()) throw std::invalid_argument("is_primitive: empty word");
  return root_length(word) == word.size();
}

int mobius(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("mobius: argument must be >= 1");
  int result = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

ExactInt psi(int alphabet_size, int length) {
  if (alphabet_size < 1 || length < 1) throw std::invalid_argument("psi: N, t must be >= 1");
  ExactInt total = 0;
  for (int d = 1; d <= length; ++d) {
    if (length % d != 0) continue;
    const int mu = mobius(d);
    if (mu != 0) total += mu * power(alphabet_size, length / d);
  }
  return total;
}

namespace {

std::vector<Symbol> parse_symbol_list(std::string_view body, const std::string& whole) {
  std::vector<Symbol> out;
  if (body.empty()) return out;
  const bool listed = body.find(',') != std::string_view::npos ||
                      (body.front() == '[' && body.back() == ']');
  if (listed) {
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError("unbalanced '[' in word '" + whole + "'");
      body = body.substr(1, body.size() - 2);
    }
    std::size_t start = 0;
    while (start <= body.size()) {
      auto end = body.find(',', start);
      if (end == std::string_view::npos) end = body.size();
      auto token = body.substr(start, end - start);
      if (!token.empty()) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          throw ParseError("malformed symbol '" + std::string(token) + "' in word '" + whole + "'");
        }
        out.push_back(v);
      }
      start = end + 1;
    }
    return out;
  }
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed symbol '" + std::string(1, c) + "' in word '" + whole + "'");
    }
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

EventuallyPeriodicWord parse_word(std::string_view text, std::optional<int> alphabet_size) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    throw ParseError("word '" + s + "' must have the form PRE(PER)");
  }
  auto pre = parse_symbol_list(std::string_view(s).substr(0, open), s);
  auto per = parse_symbol_list(std::string_view(s).substr(open + 1, s.size() - open - 2), s);
  if (per.empty()) throw ParseError("word '" + s + "' has an empty period");
  int max_symbol = 0;
  for (Symbol x : pre) max_symbol = std::max(max_symbol, x);
  for (Symbol x : per) max_symbol = std::max(max_symbol, x);
  const int n = alphabet_size.value_or(max_symbol + 1);
  try {
    return EventuallyPeriodicWord(n, std::move(pre), std::move(per));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_word(const EventuallyPeriodicWord& w) {
  const bool digits =
      std::all_of(w.preperiod().begin(), w.preperiod().end(), [](Symbol x) { return x <= 9; }) &&
      std::all_of(w.period().begin(), w.period().end(), [](Symbol x) { return x <= 9; });
  auto render = [&](std::span<const Symbol> part) {
    std::string out;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (!digits && i > 0) out += ",";
      out += std::to_string(part[i]);
    }
    return digits ? out : "[" + out + "]";
  };
  std::string pre = w.preperiod().empty() && digits ? "" : render(w.preperiod());
  return pre + "(" + render(w.period()) + ")";
}

}  // namespace shiftpat
