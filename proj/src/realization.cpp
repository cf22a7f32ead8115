#include "shiftpat/realization.hpp"

#include <algorithm>
#include <cctype>

#include "shiftpat/errors.hpp"

namespace shiftpat {

namespace {

void require_length_two(const Permutation& pi, const char* op) {
  if (pi.size() < 2) throw std::invalid_argument(std::string(op) + " requires n >= 2");
}

}  // namespace

std::vector<int> a_set(const Permutation& pi) {
  require_length_two(pi, "a_set");
  const int n = pi.size();
  const Permutation inv = inverse(pi);
  std::vector<int> out;
  for (int a = 1; a <= n - 1; ++a) {
    const int i = inv.at(a);
    const int j = inv.at(a + 1);
    if (i < n && j < n && pi.at(i + 1) > pi.at(j + 1)) out.push_back(a);
  }
  return out;
}

Delta delta(const Permutation& pi) {
  require_length_two(pi, "delta");
  const int n = pi.size();
  const int b = pi.at(n);
  if (b != 1 && b != n) {
    const int i = pi.position_of(b - 1);
    const int j = pi.position_of(b + 1);
    // i, j != n because pi(i), pi(j) != b.
    if (pi.at(i + 1) > pi.at(j + 1)) return {1, DeltaCase::interior};
    return {};
  }
  if (b == 1 && pi.at(n - 1) == 2) return {1, DeltaCase::ends_with_1};
  if (b == n && pi.at(n - 1) == n - 1) return {1, DeltaCase::ends_with_n};
  return {};
}

int n_min(const Permutation& pi) {
  if (pi.size() == 1) return 1;
  return 1 + static_cast<int>(a_set(pi).size()) + delta(pi).value;
}

int n_min_marked(const Permutation& pi) {
  if (pi.size() == 1) return 1;
  const MarkedCycle hat = theta(pi);
  return 1 + marked_des(hat) + marked_epsilon(hat);
}

bool RequiredChain::strict_after(int g) const {
  return std::find(strict_gaps.begin(), strict_gaps.end(), g) != strict_gaps.end();
}

RequiredChain required_chain(const Permutation& pi) {
  require_length_two(pi, "required_chain");
  const int n = pi.size();
  const int b = pi.at(n);
  const Permutation inv = inverse(pi);

  RequiredChain chain;
  chain.shape = b == 1 ? ChainShape::ends_with_1
                : b == n ? ChainShape::ends_with_n
                         : ChainShape::interior;
  for (int value = 1; value <= n; ++value) {
    if (value != b) chain.order.push_back(inv.at(value));
  }

  // Gap g sits between order[g] and order[g+1] (1-based).
  auto gap_before_value = [&](int value) {
    return value < b ? value - 1 : value - 2;  // index of the gap ending at `value`
  };
  for (int a : a_set(pi)) chain.strict_gaps.push_back(gap_before_value(a + 1));

  const Delta d = delta(pi);
  if (d.kind == DeltaCase::interior) chain.strict_gaps.push_back(gap_before_value(b + 1));
  if (d.kind == DeltaCase::ends_with_1) chain.tail = TailRequirement::nonincreasing_from_n_minus_1;
  if (d.kind == DeltaCase::ends_with_n) chain.tail = TailRequirement::nondecreasing_from_n_minus_1;
  std::sort(chain.strict_gaps.begin(), chain.strict_gaps.end());
  return chain;
}

std::string format_chain(const RequiredChain& chain) {
  std::string out;
  for (std::size_t g = 0; g < chain.order.size(); ++g) {
    if (g > 0) out += chain.strict_after(static_cast<int>(g)) ? "<" : "<=";
    out += "w" + std::to_string(chain.order[g]);
  }
  return out;
}

FiniteWord base_assignment(const Permutation& pi) {
  require_length_two(pi, "base_assignment");
  const int n = pi.size();
  const RequiredChain chain = required_chain(pi);
  std::vector<Symbol> w(static_cast<std::size_t>(n - 1), 0);
  Symbol value = chain.shape == ChainShape::ends_with_1 && pi.at(n - 1) == 2 ? 1 : 0;
  for (std::size_t g = 0; g < chain.order.size(); ++g) {
    if (g > 0 && chain.strict_after(static_cast<int>(g))) ++value;
    w[static_cast<std::size_t>(chain.order[g] - 1)] = value;
  }
  return FiniteWord(n_min(pi), std::move(w));
}

namespace {

bool variant_e_condition(const Permutation& pi, const FiniteWord& prefix) {
  const int n = pi.size();
  const int b = pi.at(n);
  if (b == 1 || b == n) return false;
  return prefix.at(pi.position_of(b - 1)) < prefix.at(pi.position_of(b + 1));
}

}  // namespace

std::vector<WitnessVariant> applicable_variants(const Permutation& pi) {
  require_length_two(pi, "applicable_variants");
  const int n = pi.size();
  const int b = pi.at(n);
  std::vector<WitnessVariant> out;
  if (b != n) out.push_back(WitnessVariant::A);
  if (b != 1) out.push_back(WitnessVariant::B);
  if (b == 1) out.push_back(WitnessVariant::C);
  if (b == n) out.push_back(WitnessVariant::D);
  if (variant_e_condition(pi, base_assignment(pi))) {
    out.push_back(WitnessVariant::E);
    out.push_back(WitnessVariant::F);
  }
  return out;
}

WitnessSpec witness(const Permutation& pi, std::optional<WitnessVariant> variant,
                    std::optional<int> repetitions) {
  require_length_two(pi, "witness");
  const int n = pi.size();
  const int b = pi.at(n);
  const FiniteWord prefix = base_assignment(pi);
  const int big_n = prefix.alphabet_size();
  const auto w = prefix.symbols();
  const WitnessVariant v =
      variant.value_or(pi.at(n - 1) > b ? WitnessVariant::A : WitnessVariant::B);

  if (repetitions && v != WitnessVariant::A && v != WitnessVariant::B) {
    throw std::invalid_argument("repetition count applies only to variants A and B");
  }

  switch (v) {
    case WitnessVariant::A:
    case WitnessVariant::B: {
      const bool is_a = v == WitnessVariant::A;
      if (is_a && b == n) throw std::invalid_argument("variant A requires pi(n) != n");
      if (!is_a && b == 1) throw std::invalid_argument("variant B requires pi(n) != 1");
      const int k = pi.position_of(is_a ? b + 1 : b - 1);
      const int m = repetitions.value_or(n - 1);
      if (m < 1 || (m - 1) * (n - k) < n - 2) {
        throw std::invalid_argument("repetition count m=" + std::to_string(m) +
                                    " violates m >= 1 + (n-2)/(n-k) with k=" + std::to_string(k));
      }
      std::vector<Symbol> pre(w.begin(), w.begin() + (k - 1));
      for (int r = 0; r < m; ++r) pre.insert(pre.end(), w.begin() + (k - 1), w.end());
      const Symbol tail = is_a ? 0 : big_n - 1;
      return {v, k, m, EventuallyPeriodicWord(big_n, std::move(pre), {tail})};
    }
    case WitnessVariant::C:
    case WitnessVariant::D: {
      const bool is_c = v == WitnessVariant::C;
      if (is_c && b != 1) throw std::invalid_argument("variant C requires pi(n) = 1");
      if (!is_c && b != n) throw std::invalid_argument("variant D requires pi(n) = n");
      const Symbol tail = is_c ? 0 : big_n - 1;
      return {v, 0, 0, EventuallyPeriodicWord(big_n, {w.begin(), w.end()}, {tail})};
    }
    case WitnessVariant::E:
    case WitnessVariant::F: {
      if (b == 1 || b == n) {
        throw std::invalid_argument(std::string("variant ") + variant_name(v) +
                                    " requires 1 < pi(n) < n");
      }
      if (!variant_e_condition(pi, prefix)) {
        throw std::invalid_argument(std::string("variant ") + variant_name(v) +
                                    " requires w_{pi^-1(b-1)} < w_{pi^-1(b+1)}");
      }
      const Symbol c = prefix.at(pi.position_of(b - 1));
      std::vector<Symbol> pre(w.begin(), w.end());
      const bool is_e = v == WitnessVariant::E;
      pre.push_back(is_e ? c : c + 1);
      const Symbol tail = is_e ? big_n - 1 : 0;
      return {v, 0, 0, EventuallyPeriodicWord(big_n, std::move(pre), {tail})};
    }
  }
  throw std::logic_error("unreachable witness variant");
}

bool realize_check(const Permutation& pi, const EventuallyPeriodicWord& w) {
  const auto p = pat(w, pi.size());
  return p && *p == pi;
}

char variant_name(WitnessVariant v) { return static_cast<char>('A' + static_cast<int>(v)); }

WitnessVariant parse_variant(std::string_view name) {
  if (name.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (c >= 'A' && c <= 'F') return static_cast<WitnessVariant>(c - 'A');
  }
  throw ParseError("unknown witness variant '" + std::string(name) + "' (expected A..F)");
}

const char* delta_case_name(DeltaCase c) {
  switch (c) {
    case DeltaCase::none: return "none";
    case DeltaCase::interior: return "I";
    case DeltaCase::ends_with_1: return "II";
    case DeltaCase::ends_with_n: return "III";
  }
  return "none";
}

}  // namespace shiftpat
