#include <doctest.h>

#include "oracles.hpp"
#include "reference_values.hpp"
#include "shiftpat/conjectures.hpp"
#include "shiftpat/errors.hpp"

using namespace shiftpat;

namespace {
ExactInt factorial(int n) {
  ExactInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

TEST_CASE("t0 elements") {
  std::set<std::string> three;
  for (const auto& mc : t0_elements(3)) three.insert(format_marked_cycle(mc));
  CHECK(three == std::set<std::string>{"* 3 1", "2 * 1", "2 3 *", "* 1 2", "3 * 2", "3 1 *"});
  for (int n = 2; n <= 7; ++n) {
    const auto elements = t0_elements(n);
    CHECK(elements.size() == factorial(n));
    CHECK(std::set<MarkedCycle>(elements.begin(), elements.end()).size() == elements.size());
  }
  const auto d3 = zeroed_descent_distribution(3);
  CHECK(d3.by_count == std::map<int, ExactInt>{{0, 1}, {1, 4}, {2, 1}});
}

TEST_CASE("zeroed descents count the marked entry") {
  const MarkedCycle mc = MarkedCycle::from_one_line(std::vector<int>{3, 5, 4, 0, 1});
  CHECK(format_zeroed(mc) == "3 5 4 0 1");
  CHECK(zeroed_descent_set(mc) == std::vector<int>{2, 3});
  CHECK(marked_des(mc) == 2);  // 3 5 4 1
}

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian_row(1) == std::vector<ExactInt>{1});
  CHECK(eulerian_row(3) == std::vector<ExactInt>{1, 4, 1});
  CHECK(eulerian_row(4) == std::vector<ExactInt>{1, 11, 11, 1});
  CHECK(eulerian_row(5) == std::vector<ExactInt>{1, 26, 66, 26, 1});
  for (int n = 1; n <= 7; ++n) {
    const auto row = eulerian_row(n);
    const auto census = permutation_descent_distribution(n);
    for (int k = 0; k < n; ++k) {
      const auto it = census.by_count.find(k);
      CHECK(row[static_cast<std::size_t>(k)] == (it == census.by_count.end() ? ExactInt(0) : it->second));
    }
  }
}

TEST_CASE("descent-set conjecture for small n") {
  for (int n = 2; n <= 7; ++n) {
    const auto report = check_conjecture1(n);
    CHECK(report.matches);
    CHECK(report.zeroed_cycles.population() == factorial(n));
    CHECK(report.zeroed_cycles == report.permutations);
  }
  const auto four = check_conjecture1(4);
  CHECK(four.zeroed_cycles.by_count == std::map<int, ExactInt>{{0, 1}, {1, 11}, {2, 11}, {3, 1}});
  CHECK_THROWS_AS(check_conjecture1(10), BoundExceeded);
  CHECK_THROWS_AS(check_conjecture1(6, 5), BoundExceeded);
}

TEST_CASE("phi") {
  const MarkedCycle hat = parse_marked_cycle("* 1 5 7 6 2 3");
  REQUIRE(in_e_set(hat));
  CHECK(format_zeroed(phi(hat)) == "3 5 4 0 1");
  CHECK(phi_inv(phi(hat)) == hat);
  CHECK_THROWS_AS(phi(parse_marked_cycle("2 3 *")), std::invalid_argument);

  for (int n = 3; n <= 8; ++n) {
    std::set<MarkedCycle> images;
    std::size_t e_size = 0;
    for (const auto& pi : oracle::all_permutations(n)) {
      const MarkedCycle mc = theta(pi);
      if (!in_e_set(mc)) continue;
      ++e_size;
      const MarkedCycle image = phi(mc);
      CHECK(phi_inv(image) == mc);
      CHECK(marked_des(mc) == descent_count(image.one_line(0)));
      images.insert(image);
    }
    CHECK(e_size == factorial(n - 2));
    CHECK(images.size() == e_size);
    const auto t0 = t0_elements(n - 2);
    CHECK(images == std::set<MarkedCycle>(t0.begin(), t0.end()));
  }
}

TEST_CASE("rc swaps E and E' and keeps descents") {
  for (int n = 3; n <= 7; ++n) {
    std::size_t e = 0, e_prime = 0;
    for (const auto& pi : oracle::all_permutations(n)) {
      const MarkedCycle mc = theta(pi);
      CHECK((in_e_set(mc) || in_e_prime_set(mc)) == (marked_epsilon(mc) == 1));
      if (in_e_set(mc)) {
        ++e;
        CHECK(in_e_prime_set(marked_rc(mc)));
        CHECK(marked_des(marked_rc(mc)) == marked_des(mc));
      }
      if (in_e_prime_set(mc)) ++e_prime;
    }
    CHECK(e == e_prime);
  }
}

TEST_CASE("marked-cycle recount of a_{n,N}") {
  for (int n = 2; n <= 7; ++n) {
    for (int alphabet = 2; alphabet <= 7; ++alphabet) {
      CHECK(marked_cycle_count(n, alphabet) == count_a(n, alphabet));
    }
  }
}

TEST_CASE("divisibility by 6") {
  CHECK(count_a(5, 3) % 6 == 0);
  CHECK(count_a(8, 5) % 6 == 0);
  CHECK(count_a(7, 2) % 2 == 0);
  const auto report = check_conjecture2(12);
  CHECK(report.verified);
  for (const auto& cell : report.cells) {
    CHECK(cell.even);
    CHECK(cell.divisibility_claimed == (cell.alphabet >= 3 && cell.alphabet < cell.n));
    if (cell.divisibility_claimed) CHECK(cell.divisible_by_6);
    CHECK(cell.count == count_a(cell.n, cell.alphabet));
  }
  const auto cell72 = std::find_if(report.cells.begin(), report.cells.end(),
                                   [](const Conjecture2Cell& c) { return c.n == 7 && c.alphabet == 2; });
  REQUIRE(cell72 != report.cells.end());
  CHECK_FALSE(cell72->divisibility_claimed);
}
