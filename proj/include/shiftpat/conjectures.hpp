#pragma once

#include <map>
#include <vector>

#include "shiftpat/enumeration.hpp"
#include "shiftpat/exact_int.hpp"
#include "shiftpat/permutation.hpp"

namespace shiftpat {

/// Census of descent sets (1-based positions) and of descent counts.
struct DescentDistribution {
  std::map<std::vector<int>, ExactInt> by_set;
  std::map<int, ExactInt> by_count;

  ExactInt population() const;
  void add(const std::vector<int>& descents);

  friend bool operator==(const DescentDistribution&, const DescentDistribution&) = default;
};

/// All n-cycles with one marked entry, generated cycle by cycle (not via
/// theta). In the zeroed view the marked entry reads as 0 and is counted in
/// descents.
std::vector<MarkedCycle> t0_elements(int n);

DescentDistribution zeroed_descent_distribution(int n);
DescentDistribution permutation_descent_distribution(int n);

/// Eulerian numbers A(n, k), k = 0..n-1, by the standard recurrence.
std::vector<ExactInt> eulerian_row(int n);

inline constexpr int kDefaultConjectureBound = 9;

struct Conjecture1Report {
  int n = 0;
  bool matches = false;
  DescentDistribution zeroed_cycles;
  DescentDistribution permutations;
};

/// Compares descent-set distributions of zeroed marked cycles and S_n.
/// Throws BoundExceeded when n > bound.
Conjecture1Report check_conjecture1(int n, int bound = kDefaultConjectureBound);

/// [*,1,...]: the marked cycles with epsilon = 1 of the first kind.
bool in_e_set(const MarkedCycle& mc);
/// [...,n,*]
bool in_e_prime_set(const MarkedCycle& mc);

/// [*,1,x_3..x_n] -> [x_3-2 .. x_n-2]; the entry 2 becomes the marked 0.
/// Throws std::invalid_argument if mc is not of the form [*,1,...].
MarkedCycle phi(const MarkedCycle& mc);
MarkedCycle phi_inv(const MarkedCycle& zeroed);

struct Conjecture2Cell {
  int n = 0;
  int alphabet = 0;
  ExactInt count;
  bool even = false;
  bool divisible_by_6 = false;
  bool divisibility_claimed = false;  // 3 <= N < n
};

struct Conjecture2Report {
  int n_max = 0;
  bool verified = true;  // every claimed cell divisible by 6 and every cell even
  std::vector<Conjecture2Cell> cells;
};

Conjecture2Report check_conjecture2(int n_max);

/// a_{n,N} recounted over marked cycles: des = N-1 with epsilon = 0, plus
/// des = N-2 with epsilon = 1.
ExactInt marked_cycle_count(int n, int alphabet);

}  // namespace shiftpat
