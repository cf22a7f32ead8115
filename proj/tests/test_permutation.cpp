#include <doctest.h>

#include "oracles.hpp"
#include "shiftpat/errors.hpp"
#include "shiftpat/permutation.hpp"

using namespace shiftpat;

namespace {
Permutation P(std::vector<int> e) { return Permutation(std::move(e)); }
}  // namespace

TEST_CASE("permutation rejects non-bijections") {
  CHECK_THROWS_AS(P({}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
  CHECK(P({2, 1}).position_of(1) == 2);
}

TEST_CASE("reduce") {
  CHECK(reduce(std::vector<int>{2, 5, 1, 7, 3, 6, 4}) == P({2, 5, 1, 7, 3, 6, 4}));
  CHECK(reduce(std::vector<int>{8, 14, 2, 12, 3}) == P({3, 5, 1, 4, 2}));
  CHECK(reduce(std::vector<int>{10, 20}) == P({1, 2}));
  CHECK(reduce(std::vector<double>{4, 7, 1, 6.2, 1.41421356}) == P({3, 5, 1, 4, 2}));
  CHECK_THROWS_WITH_AS(reduce(std::vector<int>{3, 1, 3}), doctest::Contains("reduction undefined"),
                       std::domain_error);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> value(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<long long> v(static_cast<std::size_t>(1 + trial % 9));
    for (auto& x : v) x = value(rng);
    const auto expected = oracle::rank_by_counting(v);
    if (!expected) {
      CHECK_THROWS_AS(reduce(v), std::domain_error);
      continue;
    }
    const Permutation r = reduce(v);
    CHECK(std::vector<int>(r.entries().begin(), r.entries().end()) == *expected);
    CHECK(reduce(std::vector<int>(r.entries().begin(), r.entries().end())) == r);  // idempotent
  }
}

TEST_CASE("descent_set") {
  CHECK(descent_set(std::vector<int>{1, 2, 3}).empty());
  CHECK(descent_set(std::vector<int>{2, 5, 1, 7, 3, 6, 4}) == std::vector<int>{2, 4, 6});
  CHECK(descent_set(std::vector<int>{5, 3, 6, 1, 7, 4, 9, 2}) == std::vector<int>{1, 3, 5, 7});
  CHECK(descent_count(std::vector<int>{5, 3, 6, 1, 7, 4, 9, 2}) == 4);
  CHECK(descent_set(std::vector<int>{4}).empty());
}

TEST_CASE("contains_consecutive") {
  CHECK(contains_consecutive(P({1, 2, 3}), P({2, 1})).empty());
  CHECK(avoids(P({1, 2, 3}), P({2, 1})));
  CHECK(contains_consecutive(P({4, 2, 1, 7, 5, 3, 6}), P({2, 1, 3})) == std::vector<int>{2, 5});
  CHECK(contains_consecutive(P({2, 1}), P({3, 1, 2})).empty());
  for (const auto& pi : oracle::all_permutations(4)) {
    CHECK(contains_consecutive(pi, pi) == std::vector<int>{1});
  }
  // Every window of pi is found by the containment scan.
  for (const auto& pi : oracle::all_permutations(6)) {
    for (int k = 1; k <= 6; ++k) {
      for (int s = 0; s + k <= 6; ++s) {
        const auto window = reduce(pi.entries().subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(k)));
        const auto hits = contains_consecutive(pi, window);
        CHECK(std::find(hits.begin(), hits.end(), s + 1) != hits.end());
      }
    }
  }
}

TEST_CASE("symmetries") {
  CHECK(complement(P({1, 2})) == P({2, 1}));
  CHECK(inverse(P({8, 9, 3, 1, 4, 6, 2, 7, 5})) == P({4, 7, 3, 5, 9, 6, 8, 1, 2}));
  CHECK(reverse_complement(P({2, 3, 1})) == P({3, 1, 2}));

  auto cycle_type = [](const Permutation& p) {
    std::vector<std::size_t> lengths;
    for (const auto& c : cycle_decomposition(p)) lengths.push_back(c.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  };
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> images_c, images_rc, images_inv;
    for (const auto& pi : oracle::all_permutations(n)) {
      CHECK(complement(complement(pi)) == pi);
      CHECK(reverse_complement(reverse_complement(pi)) == pi);
      CHECK(inverse(inverse(pi)) == pi);
      for (int i = 1; i <= n; ++i) CHECK(inverse(pi).at(pi.at(i)) == i);
      CHECK(cycle_type(inverse(pi)) == cycle_type(pi));
      CHECK(cycle_type(reverse_complement(pi)) == cycle_type(pi));
      images_c.insert(complement(pi));
      images_rc.insert(reverse_complement(pi));
      images_inv.insert(inverse(pi));
    }
    const std::size_t fact = oracle::all_permutations(n).size();
    CHECK(images_c.size() == fact);
    CHECK(images_rc.size() == fact);
    CHECK(images_inv.size() == fact);
  }
}

TEST_CASE("cycle_decomposition") {
  const auto cycles = cycle_decomposition(P({2, 5, 1, 7, 3, 6, 4}));
  CHECK(format_cycles(cycles) == "(1,2,5,3)(4,7)(6)");
  CHECK(format_cycles(cycle_decomposition(Permutation::identity(3))) == "(1)(2)(3)");
  CHECK_FALSE(is_n_cycle(Permutation::identity(3)));
  CHECK(format_cycles(cycle_decomposition(P({2, 3, 1}))) == "(1,2,3)");
  CHECK(is_n_cycle(P({2, 3, 1})));
  CHECK(is_n_cycle(P({1})));
}

TEST_CASE("theta and its inverse") {
  CHECK(format_marked_cycle(theta(P({8, 9, 2, 3, 6, 4, 1, 5, 7}))) == "5 3 6 1 7 4 * 9 2");
  CHECK(format_marked_cycle(theta(P({3, 4, 2, 1}))) == "* 1 4 2");
  CHECK(format_marked_cycle(theta(P({8, 9, 3, 1, 4, 6, 2, 7, 5}))) == "4 7 1 6 * 2 5 9 3");
  CHECK(format_marked_cycle(theta(P({1}))) == "*");

  for (int n = 1; n <= 7; ++n) {
    std::set<MarkedCycle> image;
    for (const auto& pi : oracle::all_permutations(n)) {
      const MarkedCycle mc = theta(pi);
      CHECK(theta_inv(mc) == pi);
      image.insert(mc);
    }
    CHECK(image.size() == oracle::all_permutations(n).size());  // |T_n| = n!
  }
}

TEST_CASE("marked cycle invariants") {
  CHECK_THROWS_AS(MarkedCycle::from_one_line(std::vector<int>{2, 1, 0}), std::invalid_argument);  // two 2-cycle pieces
  CHECK_THROWS_AS(MarkedCycle::from_one_line(std::vector<int>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MarkedCycle::from_one_line(std::vector<int>{2, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MarkedCycle::from_one_line(std::vector<int>{1, 0}), std::invalid_argument);  // [1,2] is not a 2-cycle

  const MarkedCycle a = parse_marked_cycle("5 3 6 1 7 4 * 9 2");
  CHECK(a.implied_value() == 8);
  CHECK(marked_des(a) == 4);
  CHECK(marked_des(parse_marked_cycle("* 1 4 2")) == 1);
  CHECK(marked_epsilon(parse_marked_cycle("* 1 4 2")) == 1);
  CHECK(marked_epsilon(parse_marked_cycle("4 7 1 6 * 2 5 9 3")) == 0);

  // rc and inverse keep T_n closed; rc is an involution.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const MarkedCycle mc = theta(pi);
      CHECK(marked_rc(marked_rc(mc)) == mc);
      CHECK(marked_inverse(marked_inverse(mc)) == mc);
      CHECK(is_n_cycle(marked_rc(mc).cycle()));
      CHECK(is_n_cycle(marked_inverse(mc).cycle()));
      CHECK(marked_inverse(mc).cycle().at(marked_inverse(mc).marked_position()) == mc.marked_position());
    }
  }
}

TEST_CASE("parsing") {
  CHECK(parse_permutation("4 3 6 1 5 2") == P({4, 3, 6, 1, 5, 2}));
  CHECK(parse_permutation("436152") == P({4, 3, 6, 1, 5, 2}));
  CHECK(parse_permutation("[4, 3, 6, 1, 5, 2]") == P({4, 3, 6, 1, 5, 2}));
  CHECK(parse_permutation("10 9 8 7 6 5 4 3 2 1") == P({10, 9, 8, 7, 6, 5, 4, 3, 2, 1}));
  CHECK(parse_permutation("1") == P({1}));
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
  CHECK_THROWS_AS(parse_permutation("4 3 x"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 1"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1234567890"), ParseError);
  CHECK(format_marked_cycle(parse_marked_cycle("5361*74")) == "5 3 6 1 * 7 4");
  CHECK_THROWS_AS(parse_marked_cycle("1 2 3"), ParseError);
  CHECK(format_compact(P({6, 1, 5, 2, 4, 3})) == "615243");
}
