// Property checks with fixed seeds. Built as its own executable so it can be
// run on its own: ./shiftpat_properties
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "shiftpat/enumeration.hpp"
#include "shiftpat/realization.hpp"

using namespace shiftpat;

namespace {

int sign(std::strong_ordering c) { return c < 0 ? -1 : c > 0 ? 1 : 0; }

EventuallyPeriodicWord random_word(std::mt19937& rng, int alphabet, int max_pre, int max_per) {
  return EventuallyPeriodicWord(alphabet, oracle::random_symbols(rng, alphabet, static_cast<int>(rng() % (max_pre + 1))),
                                oracle::random_symbols(rng, alphabet, 1 + static_cast<int>(rng() % max_per)));
}

EventuallyPeriodicWord complement_word(const EventuallyPeriodicWord& w) {
  auto flip = [&](std::span<const int> s) {
    std::vector<int> out;
    for (int x : s) out.push_back(w.alphabet_size() - 1 - x);
    return out;
  };
  return EventuallyPeriodicWord(w.alphabet_size(), flip(w.preperiod()), flip(w.period()));
}

}  // namespace

TEST_CASE("word order: reflexive, antisymmetric, transitive, total") {
  std::mt19937 rng(20240601);
  std::vector<EventuallyPeriodicWord> words;
  for (int i = 0; i < 60; ++i) words.push_back(random_word(rng, 2 + i % 3, 5, 4));
  // A few deliberately equal words written differently.
  words.emplace_back(2, std::vector<int>{0, 1, 0, 1}, std::vector<int>{0, 1, 0, 1});
  words.emplace_back(2, std::vector<int>{}, std::vector<int>{0, 1});
  for (const auto& a : words) {
    CHECK(compare(a, a) == 0);
    for (const auto& b : words) {
      const int ab = sign(compare(a, b));
      CHECK(ab == -sign(compare(b, a)));
      for (const auto& c : words) {
        if (ab <= 0 && sign(compare(b, c)) <= 0) CHECK(sign(compare(a, c)) <= 0);
        if (ab == 0) CHECK(sign(compare(a, c)) == sign(compare(b, c)));
      }
    }
  }
  // Sorting by compare gives the order of the long unrolled prefixes.
  auto sorted = words;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto& a = sorted[i];
    const auto& b = sorted[i + 1];
    std::vector<int> pa(a.preperiod().begin(), a.preperiod().end()), qa(a.period().begin(), a.period().end());
    std::vector<int> pb(b.preperiod().begin(), b.preperiod().end()), qb(b.period().begin(), b.period().end());
    CHECK(oracle::unrolled_compare(pa, qa, pb, qb) <= 0);
  }
}

TEST_CASE("factors between adjacent values are primitive") {
  std::mt19937 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int alphabet = 2 + trial % 3;
    const auto w = random_word(rng, alphabet, 6, 4);
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto pi = pat(w, n);
    if (!pi) continue;
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) {
        if (std::abs(pi->at(i) - pi->at(k)) != 1) continue;
        std::vector<int> factor;
        for (int x = i; x <= k - 1; ++x) factor.push_back(w.at(x));
        CHECK(oracle::primitive_by_repetition(factor));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("complement symmetry") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) CHECK(n_min(complement(pi)) == n_min(pi));
  }
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto w = random_word(rng, 2 + trial % 3, 6, 3);
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto pi = pat(w, n);
    const auto flipped = pat(complement_word(w), n);
    CHECK(pi.has_value() == flipped.has_value());
    if (pi && flipped) CHECK(*flipped == complement(*pi));
  }
}

TEST_CASE("complement symmetry on every short binary word") {
  auto all_words = [](int length) {
    std::vector<std::vector<int>> out;
    for (int bits = 0; bits < (1 << length); ++bits) {
      std::vector<int> w;
      for (int i = length - 1; i >= 0; --i) w.push_back((bits >> i) & 1);
      out.push_back(w);
    }
    return out;
  };
  for (int pre_len = 0; pre_len <= 6; ++pre_len) {
    for (int per_len = 1; per_len <= 3; ++per_len) {
      for (const auto& pre : all_words(pre_len)) {
        for (const auto& per : all_words(per_len)) {
          const EventuallyPeriodicWord w(2, pre, per);
          const auto flipped = complement_word(w);
          for (int n = 1; n <= 5; ++n) {
            const auto pi = pat(w, n);
            const auto pc = pat(flipped, n);
            REQUIRE(pi.has_value() == pc.has_value());
            if (pi) CHECK(*pc == complement(*pi));
          }
        }
      }
    }
  }
}

TEST_CASE("allowed patterns are closed under consecutive containment") {
  for (int alphabet = 2; alphabet <= 4; ++alphabet) {
    std::map<int, std::set<Permutation>> allowed;
    for (int n = 1; n <= 6; ++n) allowed[n] = oracle_allowed(n, alphabet);
    for (int n = 2; n <= 6; ++n) {
      for (const auto& pi : allowed[n]) {
        for (int k = 1; k < n; ++k) {
          for (int s = 0; s + k <= n; ++s) {
            const auto window = reduce(pi.entries().subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(k)));
            CHECK(allowed[k].contains(window));
          }
        }
      }
      // Same statement through the formula: N never grows when passing to a window.
      for (const auto& pi : oracle::all_permutations(n)) {
        if (n_min(pi) > alphabet) continue;
        CHECK(allowed[n].contains(pi));
        const auto window = reduce(pi.entries().subspan(0, static_cast<std::size_t>(n - 1)));
        CHECK(n_min(window) <= alphabet);
      }
    }
  }
}
