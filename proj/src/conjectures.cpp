#include "shiftpat/conjectures.hpp"

#include <algorithm>
#include <numeric>

#include "shiftpat/errors.hpp"

namespace shiftpat {

ExactInt DescentDistribution::population() const {
  ExactInt total = 0;
  for (const auto& [set, count] : by_set) total += count;
  return total;
}

void DescentDistribution::add(const std::vector<int>& descents) {
  by_set[descents] += 1;
  by_count[static_cast<int>(descents.size())] += 1;
}

std::vector<MarkedCycle> t0_elements(int n) {
  if (n < 1) throw std::invalid_argument("t0_elements requires n >= 1");
  std::vector<MarkedCycle> out;
  // Cycle notation (1, c_2, ..., c_n) for every arrangement of 2..n.
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  do {
    std::vector<int> one_line(static_cast<std::size_t>(n));
    int from = 1;
    for (int to : rest) {
      one_line[static_cast<std::size_t>(from - 1)] = to;
      from = to;
    }
    one_line[static_cast<std::size_t>(from - 1)] = 1;
    const Permutation cycle(std::move(one_line));
    for (int marked = 1; marked <= n; ++marked) out.emplace_back(cycle, marked);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

DescentDistribution zeroed_descent_distribution(int n) {
  DescentDistribution d;
  for (const auto& mc : t0_elements(n)) d.add(zeroed_descent_set(mc));
  return d;
}

DescentDistribution permutation_descent_distribution(int n) {
  DescentDistribution d;
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    d.add(descent_set(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return d;
}

std::vector<ExactInt> eulerian_row(int n) {
  // A(m, k) = (k+1) A(m-1, k) + (m-k) A(m-1, k-1)
  std::vector<ExactInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<ExactInt> next(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
      if (k < m - 1) next[static_cast<std::size_t>(k)] += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k > 0) next[static_cast<std::size_t>(k)] += (m - k) * row[static_cast<std::size_t>(k - 1)];
    }
    row = std::move(next);
  }
  return row;
}

Conjecture1Report check_conjecture1(int n, int bound) {
  if (n < 1) throw std::invalid_argument("check_conjecture1 requires n >= 1");
  if (n > bound) {
    throw BoundExceeded("n=" + std::to_string(n) + " exceeds conjecture bound " + std::to_string(bound));
  }
  Conjecture1Report report;
  report.n = n;
  report.zeroed_cycles = zeroed_descent_distribution(n);
  report.permutations = permutation_descent_distribution(n);
  report.matches = report.zeroed_cycles == report.permutations;
  return report;
}

bool in_e_set(const MarkedCycle& mc) {
  return mc.size() >= 2 && mc.marked_position() == 1 && mc.cycle().at(2) == 1;
}

bool in_e_prime_set(const MarkedCycle& mc) {
  const int n = mc.size();
  return n >= 2 && mc.marked_position() == n && mc.cycle().at(n - 1) == n;
}

MarkedCycle phi(const MarkedCycle& mc) {
  if (mc.size() < 3 || !in_e_set(mc)) {
    throw std::invalid_argument("phi requires a marked cycle of the form [*,1,...] with n >= 3");
  }
  std::vector<int> zeroed;
  for (int i = 3; i <= mc.size(); ++i) zeroed.push_back(mc.cycle().at(i) - 2);
  return MarkedCycle::from_one_line(zeroed, 0);
}

MarkedCycle phi_inv(const MarkedCycle& zeroed) {
  constexpr int star = -1;
  std::vector<int> entries{star, 1};
  for (int v : zeroed.one_line(0)) entries.push_back(v + 2);
  return MarkedCycle::from_one_line(entries, star);
}

Conjecture2Report check_conjecture2(int n_max) {
  if (n_max < 2) throw std::invalid_argument("check_conjecture2 requires n_max >= 2");
  Conjecture2Report report;
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    const int top = std::max(2, n - 1);
    for (int alphabet = 2; alphabet <= top; ++alphabet) {
      Conjecture2Cell cell;
      cell.n = n;
      cell.alphabet = alphabet;
      cell.count = count_a(n, alphabet);
      cell.even = cell.count % 2 == 0;
      cell.divisible_by_6 = cell.count % 6 == 0;
      cell.divisibility_claimed = alphabet >= 3 && alphabet < n;
      if (!cell.even || (cell.divisibility_claimed && !cell.divisible_by_6)) report.verified = false;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

ExactInt marked_cycle_count(int n, int alphabet) {
  ExactInt total = 0;
  for (const auto& mc : t0_elements(n)) {
    const int des = marked_des(mc);
    const int eps = marked_epsilon(mc);
    if ((eps == 0 && des == alphabet - 1) || (eps == 1 && des == alphabet - 2)) total += 1;
  }
  return total;
}

}  // namespace shiftpat
