#include "shiftpat/permutation.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "shiftpat/errors.hpp"

namespace shiftpat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must have length >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(e));
}

int Permutation::position_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw std::out_of_range("value not in permutation");
  return static_cast<int>(it - entries_.begin()) + 1;
}

std::vector<int> descent_set(std::span<const int> seq) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] > seq[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int descent_count(std::span<const int> seq) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) count += seq[i] > seq[i + 1] ? 1 : 0;
  return count;
}

std::vector<int> contains_consecutive(const Permutation& text, const Permutation& pattern) {
  std::vector<int> starts;
  const int m = text.size();
  const int k = pattern.size();
  if (k > m) return starts;
  auto e = text.entries();
  for (int i = 0; i + k <= m; ++i) {
    if (reduce(e.subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(k))) == pattern) {
      starts.push_back(i + 1);
    }
  }
  return starts;
}

bool avoids(const Permutation& text, const Permutation& pattern) {
  return contains_consecutive(text, pattern).empty();
}

Permutation complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = n + 1 - pi.at(i);
  return Permutation(std::move(e));
}

Permutation reverse_complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = n + 1 - pi.at(n + 1 - i);
  return Permutation(std::move(e));
}

Permutation inverse(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(pi.at(i) - 1)] = i;
  return Permutation(std::move(e));
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& pi) {
  const int n = pi.size();
  std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !done[static_cast<std::size_t>(x)]; x = pi.at(x)) {
      done[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_n_cycle(const Permutation& pi) {
  int length = 1;
  for (int x = pi.at(1); x != 1; x = pi.at(x)) ++length;
  return length == pi.size();
}

MarkedCycle::MarkedCycle(Permutation cycle, int marked_position)
    : cycle_(std::move(cycle)), marked_(marked_position) {
  if (!is_n_cycle(cycle_)) throw std::invalid_argument("marked cycle is not a single n-cycle");
  if (marked_ < 1 || marked_ > cycle_.size()) {
    throw std::invalid_argument("marked position out of range");
  }
}

MarkedCycle MarkedCycle::from_one_line(std::span<const int> entries_with_star, int star) {
  const int n = static_cast<int>(entries_with_star.size());
  int marked = 0;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = entries_with_star[static_cast<std::size_t>(i)];
    if (v == star) {
      if (marked != 0) throw std::invalid_argument("marked cycle has more than one marked entry");
      marked = i + 1;
      continue;
    }
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("marked cycle entries must be distinct values in 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (marked == 0) throw std::invalid_argument("marked cycle has no marked entry");
  int missing = 1;
  while (seen[static_cast<std::size_t>(missing)]) ++missing;
  std::vector<int> full(entries_with_star.begin(), entries_with_star.end());
  full[static_cast<std::size_t>(marked - 1)] = missing;
  return MarkedCycle(Permutation(std::move(full)), marked);
}

std::vector<int> MarkedCycle::one_line(int star) const {
  std::vector<int> e(cycle_.entries().begin(), cycle_.entries().end());
  e[static_cast<std::size_t>(marked_ - 1)] = star;
  return e;
}

std::vector<int> MarkedCycle::unmarked_entries() const {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i) {
    if (i != marked_) e.push_back(cycle_.at(i));
  }
  return e;
}

MarkedCycle theta(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) sigma[static_cast<std::size_t>(pi.at(i) - 1)] = pi.at(i + 1);
  sigma[static_cast<std::size_t>(pi.at(n) - 1)] = pi.at(1);
  return MarkedCycle(Permutation(std::move(sigma)), pi.at(n));
}

Permutation theta_inv(const MarkedCycle& mc) {
  const int n = mc.size();
  const Permutation& sigma = mc.cycle();
  std::vector<int> e(static_cast<std::size_t>(n));
  int x = mc.implied_value();
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i)] = x;
    x = sigma.at(x);
  }
  return Permutation(std::move(e));
}

int marked_des(const MarkedCycle& mc) { return descent_count(mc.unmarked_entries()); }

int marked_epsilon(const MarkedCycle& mc) {
  const int n = mc.size();
  if (n < 2) return 0;
  if (mc.marked_position() == 1 && mc.cycle().at(2) == 1) return 1;
  if (mc.marked_position() == n && mc.cycle().at(n - 1) == n) return 1;
  return 0;
}

MarkedCycle marked_rc(const MarkedCycle& mc) {
  return MarkedCycle(reverse_complement(mc.cycle()), mc.size() + 1 - mc.marked_position());
}

MarkedCycle marked_inverse(const MarkedCycle& mc) {
  return MarkedCycle(inverse(mc.cycle()), mc.implied_value());
}

std::vector<int> zeroed_descent_set(const MarkedCycle& mc) {
  return descent_set(mc.one_line(0));
}

namespace {

// Splits on whitespace and commas after dropping one pair of enclosing brackets.
std::vector<std::string> tokenize(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\r\n");
  auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<std::string> tokens;
  std::string current;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_int(const std::string& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed entry '" + token + "'");
  }
  return value;
}

// star_value is returned for '*' tokens when allowed.
std::vector<int> parse_entries(std::string_view text, std::optional<int> star_value) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty permutation");
  // Digits-only shorthand: a single token such as 615243 or 5361*74.
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    const std::string& t = tokens[0];
    const bool shorthand = std::all_of(t.begin(), t.end(), [&](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || (star_value && c == '*');
    });
    if (shorthand) {
      if (t.size() > 9) throw ParseError("digits-only shorthand requires n <= 9");
      std::vector<int> out;
      for (char c : t) out.push_back(c == '*' ? *star_value : c - '0');
      return out;
    }
  }
  std::vector<int> out;
  for (const auto& token : tokens) {
    if (token == "*" && star_value) {
      out.push_back(*star_value);
    } else if (all_digits(token)) {
      out.push_back(parse_int(token));
    } else {
      throw ParseError("malformed entry '" + token + "'");
    }
  }
  return out;
}

template <typename Seq>
std::string join(const Seq& seq, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : seq) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  auto entries = parse_entries(text, std::nullopt);
  try {
    return Permutation(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

MarkedCycle parse_marked_cycle(std::string_view text) {
  auto entries = parse_entries(text, 0);
  try {
    return MarkedCycle::from_one_line(entries, 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_permutation(const Permutation& pi) { return join(pi.entries(), " "); }

std::string format_compact(const Permutation& pi) {
  if (pi.size() > 9) return format_permutation(pi);
  std::string out;
  for (int v : pi.entries()) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string format_marked_cycle(const MarkedCycle& mc) {
  std::vector<std::string> parts;
  for (int i = 1; i <= mc.size(); ++i) {
    parts.push_back(i == mc.marked_position() ? "*" : std::to_string(mc.cycle().at(i)));
  }
  return join(parts, " ");
}

std::string format_zeroed(const MarkedCycle& mc) { return join(mc.one_line(0), " "); }

std::string format_cycles(const std::vector<std::vector<int>>& cycles) {
  std::string out;
  for (const auto& c : cycles) out += "(" + join(c, ",") + ")";
  return out;
}

}  // namespace shiftpat
