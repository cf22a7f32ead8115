#include "shiftpat/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "shiftpat/errors.hpp"
#include "shiftpat/realization.hpp"

namespace shiftpat {

namespace {

void require_counting_args(int n, int alphabet, const char* op) {
  if (n < 2 || alphabet < 2) {
    throw std::invalid_argument(std::string(op) + " requires n >= 2 and N >= 2");
  }
}

// sum_{t=1}^{n-1} psi_M(t) M^{n-t-1}: the size of Omega_{n,M}.
ExactInt omega_size_formula(int n, int m) {
  ExactInt total = 0;
  for (int t = 1; t <= n - 1; ++t) total += psi(m, t) * power(m, n - t - 1);
  return total;
}

ExactInt g_inhomogeneous(int n, int m) { return omega_size_formula(n, m) - power(m, n - 2); }
ExactInt h_inhomogeneous(int n, int m) { return ExactInt(m - 1) * power(m, n - 2); }

ExactInt alternating_sum(int n, int alphabet, const std::function<ExactInt(int)>& b) {
  ExactInt total = 0;
  for (int i = 0; i <= alphabet - 2; ++i) {
    const ExactInt term = binomial(n, i) * b(alphabet - i);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

ExactInt unrolled(int n, int alphabet, const std::function<ExactInt(int)>& b) {
  std::vector<ExactInt> r;  // r[M-2]
  for (int m = 2; m <= alphabet; ++m) {
    ExactInt value = b(m);
    for (int j = 1; j <= m - 2; ++j) value -= binomial(n + j - 1, j) * r[static_cast<std::size_t>(m - j - 2)];
    r.push_back(std::move(value));
  }
  return r.back();
}

unsigned worker_count(Parallelism par) { return std::max(1u, par.threads); }

// Runs body(begin, end, worker) over [0, total) split into contiguous chunks.
template <typename Body>
void run_chunks(std::uint64_t total, unsigned workers, Body body) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
  if (workers <= 1) {
    body(0, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, chunk * w);
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([=] { body(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

std::uint64_t int_pow(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Fills `digits` with the base-N expansion of `index`, most significant first.
void decode_digits(std::uint64_t index, int base, std::vector<Symbol>& digits) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    *it = static_cast<Symbol>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
}

std::vector<Symbol> oracle_tails(int alphabet) {
  if (alphabet == 1) return {0};
  return {0, alphabet - 1};
}

// Word number `index` of the oracle family, ordered by (t, tail, u p).
EventuallyPeriodicWord oracle_word(int n, int alphabet, std::uint64_t index,
                                   std::vector<Symbol>& scratch) {
  const std::uint64_t per_prefix = int_pow(static_cast<std::uint64_t>(alphabet), n - 1);
  const auto tails = oracle_tails(alphabet);
  const std::uint64_t prefix_index = index % per_prefix;
  index /= per_prefix;
  const Symbol tail = tails[index % tails.size()];
  const int t = static_cast<int>(index / tails.size()) + 1;

  scratch.resize(static_cast<std::size_t>(n - 1));
  decode_digits(prefix_index, alphabet, scratch);
  const auto split = scratch.begin() + (n - 1 - t);
  std::vector<Symbol> pre(scratch.begin(), split);
  pre.reserve(static_cast<std::size_t>(n - 1 - t + t * (n - 1)));
  for (int r = 0; r < n - 1; ++r) pre.insert(pre.end(), split, scratch.end());
  return EventuallyPeriodicWord(alphabet, std::move(pre), {tail});
}

std::uint64_t oracle_family_size(int n, int alphabet) {
  return static_cast<std::uint64_t>(n - 1) * oracle_tails(alphabet).size() *
         int_pow(static_cast<std::uint64_t>(alphabet), n - 1);
}

}  // namespace

ExactInt count_binary(int n) {
  if (n < 2) throw std::invalid_argument("count_binary requires n >= 2");
  ExactInt total = 0;
  for (int t = 1; t <= n - 1; ++t) total += psi(2, t) * power(2, n - t - 1);
  return total;
}

ExactInt count_h(int n, int alphabet) {
  require_counting_args(n, alphabet, "count_h");
  return alternating_sum(n, alphabet, [n](int m) { return h_inhomogeneous(n, m); });
}

ExactInt count_h_recurrence(int n, int alphabet) {
  require_counting_args(n, alphabet, "count_h_recurrence");
  return unrolled(n, alphabet, [n](int m) { return h_inhomogeneous(n, m); });
}

ExactInt count_g(int n, int alphabet) {
  require_counting_args(n, alphabet, "count_g");
  return alternating_sum(n, alphabet, [n](int m) { return g_inhomogeneous(n, m); });
}

ExactInt count_g_recurrence(int n, int alphabet) {
  require_counting_args(n, alphabet, "count_g_recurrence");
  return unrolled(n, alphabet, [n](int m) { return g_inhomogeneous(n, m); });
}

ExactInt count_a(int n, int alphabet) {
  require_counting_args(n, alphabet, "count_a");
  return alternating_sum(n, alphabet, [n](int m) {
    return ExactInt(m - 2) * power(m, n - 2) + omega_size_formula(n, m);
  });
}

ExactInt count_a_recurrence(int n, int alphabet) {
  return count_g_recurrence(n, alphabet) + count_h_recurrence(n, alphabet);
}

RecurrenceSolution solve_recurrence(int n, const std::vector<ExactInt>& b) {
  if (n < 1) throw std::invalid_argument("solve_recurrence requires n >= 1");
  RecurrenceSolution out;
  auto b_at = [&](int m) { return b[static_cast<std::size_t>(m - 2)]; };
  const int last = static_cast<int>(b.size()) + 1;
  for (int m = 2; m <= last; ++m) {
    ExactInt value = b_at(m);
    for (int j = 1; j <= m - 2; ++j) {
      value -= binomial(n + j - 1, j) * out.unrolled[static_cast<std::size_t>(m - j - 2)];
    }
    out.unrolled.push_back(std::move(value));
    out.closed.push_back(alternating_sum(n, m, b_at));
  }
  return out;
}

ExactInt PatternRow::total() const {
  ExactInt sum = 0;
  for (const auto& [alphabet, cell] : cells) sum += cell.count;
  return sum;
}

PatternRow enumerate_by_nmin(int n, Parallelism par, bool keep_members, int bound) {
  if (n < 1) throw std::invalid_argument("enumerate_by_nmin requires n >= 1");
  if (n > bound) {
    throw BoundExceeded("n=" + std::to_string(n) + " exceeds enumeration bound " +
                        std::to_string(bound));
  }
  // Slice s holds the permutations starting with s + 1; slices are
  // lexicographically ordered, so concatenating them keeps the order.
  struct Slice {
    std::map<int, std::uint64_t> counts;
    std::map<int, std::vector<Permutation>> members;
  };
  std::vector<Slice> slices(static_cast<std::size_t>(n));
  run_chunks(static_cast<std::uint64_t>(n), worker_count(par),
             [&](std::uint64_t begin, std::uint64_t end, unsigned) {
               for (std::uint64_t s = begin; s < end; ++s) {
                 std::vector<int> rest;
                 for (int v = 1; v <= n; ++v) {
                   if (v != static_cast<int>(s) + 1) rest.push_back(v);
                 }
                 Slice& slice = slices[s];
                 do {
                   std::vector<int> e{static_cast<int>(s) + 1};
                   e.insert(e.end(), rest.begin(), rest.end());
                   Permutation pi(std::move(e));
                   const int alphabet = n_min(pi);
                   ++slice.counts[alphabet];
                   if (keep_members) slice.members[alphabet].push_back(std::move(pi));
                 } while (std::next_permutation(rest.begin(), rest.end()));
               }
             });

  PatternRow row;
  row.n = n;
  for (auto& slice : slices) {
    for (const auto& [alphabet, count] : slice.counts) {
      PatternCell& cell = row.cells[alphabet];
      cell.count += count;
      if (keep_members) {
        if (!cell.members) cell.members.emplace();
        auto& src = slice.members[alphabet];
        cell.members->insert(cell.members->end(), src.begin(), src.end());
      }
    }
  }
  return row;
}

PatternTable closed_form_table(int n_max) {
  PatternTable table;
  table.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    const int top = n == 2 ? 2 : n - 1;
    for (int alphabet = 2; alphabet <= top; ++alphabet) {
      table.cells[{n, alphabet}].count = count_a(n, alphabet);
    }
  }
  return table;
}

void for_each_oracle_word(int n, int alphabet,
                          const std::function<void(const EventuallyPeriodicWord&)>& visit) {
  if (n < 2 || alphabet < 1) throw std::invalid_argument("oracle family requires n >= 2, N >= 1");
  std::vector<Symbol> scratch;
  const std::uint64_t total = oracle_family_size(n, alphabet);
  for (std::uint64_t i = 0; i < total; ++i) visit(oracle_word(n, alphabet, i, scratch));
}

std::set<Permutation> oracle_allowed(int n, int alphabet, Parallelism par) {
  if (n < 1 || alphabet < 1) throw std::invalid_argument("oracle_allowed requires n, N >= 1");
  if (n == 1) return {Permutation::identity(1)};
  const std::uint64_t total = oracle_family_size(n, alphabet);
  const unsigned workers = worker_count(par);
  std::vector<std::set<Permutation>> partial(workers);
  run_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<Symbol> scratch;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (auto p = pat(oracle_word(n, alphabet, i, scratch), n)) partial[w].insert(std::move(*p));
    }
  });
  std::set<Permutation> merged;
  for (auto& s : partial) merged.merge(s);
  return merged;
}

std::set<Permutation> eventually_constant_allowed(int n, int alphabet, int max_preperiod) {
  std::set<Permutation> out;
  std::vector<Symbol> pre;
  for (int length = 0; length <= max_preperiod; ++length) {
    pre.assign(static_cast<std::size_t>(length), 0);
    const std::uint64_t count = int_pow(static_cast<std::uint64_t>(alphabet), length);
    for (std::uint64_t index = 0; index < count; ++index) {
      decode_digits(index, alphabet, pre);
      for (Symbol x = 0; x < alphabet; ++x) {
        if (auto p = pat(EventuallyPeriodicWord(alphabet, pre, {x}), n)) out.insert(std::move(*p));
      }
    }
  }
  return out;
}

namespace {

std::set<Permutation> all_permutations(int n) {
  std::set<Permutation> out;
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  do {
    out.insert(out.end(), Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace

std::set<Permutation> forbidden(int n, int alphabet, Parallelism par) {
  const auto allowed = oracle_allowed(n, alphabet, par);
  std::set<Permutation> out;
  for (const auto& pi : all_permutations(n)) {
    if (!allowed.contains(pi)) out.insert(out.end(), pi);
  }
  return out;
}

std::set<Permutation> minimal_forbidden(int n, int alphabet, Parallelism par) {
  std::vector<std::set<Permutation>> allowed_at(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) allowed_at[static_cast<std::size_t>(k)] = oracle_allowed(k, alphabet, par);
  std::set<Permutation> out;
  for (const auto& pi : forbidden(n, alphabet, par)) {
    bool minimal = true;
    for (int k = 1; k < n && minimal; ++k) {
      for (int start = 0; start + k <= n && minimal; ++start) {
        const auto window = pi.entries().subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(k));
        minimal = allowed_at[static_cast<std::size_t>(k)].contains(reduce(window));
      }
    }
    if (minimal) out.insert(out.end(), pi);
  }
  return out;
}

std::vector<MarkedCycle> extremal_marked_cycles(int n) {
  if (n < 3) throw std::invalid_argument("extremal_sextet requires n >= 3");
  const int m = (n + 1) / 2;
  constexpr int star = 0;
  std::vector<int> sigma;
  for (int v = n; v >= m + 1; --v) sigma.push_back(v);
  sigma.push_back(star);
  for (int v = m; v >= 2; --v) sigma.push_back(v);
  std::vector<int> tau{star, 1};
  for (int v = n; v >= m + 2; --v) tau.push_back(v);
  for (int v = m; v >= 2; --v) tau.push_back(v);

  const MarkedCycle s = MarkedCycle::from_one_line(sigma, star);
  const MarkedCycle t = MarkedCycle::from_one_line(tau, star);
  const MarkedCycle s_inv = marked_inverse(s);
  return {s, marked_rc(s), s_inv, marked_rc(s_inv), t, marked_rc(t)};
}

std::set<Permutation> extremal_sextet(int n) {
  std::set<Permutation> out;
  for (const auto& mc : extremal_marked_cycles(n)) out.insert(theta_inv(mc));
  return out;
}

OmegaCensus omega_census(int n, int alphabet) {
  require_counting_args(n, alphabet, "omega_census");
  OmegaCensus census;
  census.n = n;
  census.alphabet = alphabet;
  for (int j = 0; j <= alphabet - 2; ++j) {
    census.bucket[j] = 0;
    census.theta_bucket[j] = 0;
  }
  std::set<std::pair<Permutation, std::vector<int>>> decompositions;
  std::uint64_t defined = 0;

  std::vector<Symbol> u;
  std::vector<Symbol> p;
  for (int t = 1; t <= n - 1; ++t) {
    p.assign(static_cast<std::size_t>(t), 0);
    u.assign(static_cast<std::size_t>(n - 1 - t), 0);
    const std::uint64_t p_count = int_pow(static_cast<std::uint64_t>(alphabet), t);
    const std::uint64_t u_count = int_pow(static_cast<std::uint64_t>(alphabet), n - 1 - t);
    for (std::uint64_t pi_index = 0; pi_index < p_count; ++pi_index) {
      decode_digits(pi_index, alphabet, p);
      if (!is_primitive(p)) continue;
      for (std::uint64_t ui = 0; ui < u_count; ++ui) {
        decode_digits(ui, alphabet, u);
        std::vector<Symbol> pre(u);
        for (int r = 0; r < n - 1; ++r) pre.insert(pre.end(), p.begin(), p.end());
        const EventuallyPeriodicWord w(alphabet, pre, {0});
        ++census.omega_size;

        const auto pattern = pat(w, n);
        if (!pattern) {
          ++census.undefined;
          continue;
        }
        ++defined;
        const int j = alphabet - n_min(*pattern);
        census.bucket[j] += 1;
        if (pattern->at(n) == 1) {
          census.theta_bucket[j] += 1;
          ++census.theta_size;
        }

        if (pattern->at(n) == n) census.decomposition_ok = false;
        const RequiredChain chain = required_chain(*pattern);
        const FiniteWord v = base_assignment(*pattern);
        std::vector<int> c;
        for (int i : chain.order) c.push_back(w.at(i) - v.at(i));
        const bool monotone = std::is_sorted(c.begin(), c.end()) && c.front() >= 0 && c.back() <= j;
        if (!monotone) census.decomposition_ok = false;
        decompositions.emplace(*pattern, std::move(c));
      }
    }
  }
  if (decompositions.size() != defined) census.decomposition_ok = false;
  return census;
}

OmegaExpectation omega_expectation(int n, int alphabet) {
  require_counting_args(n, alphabet, "omega_expectation");
  OmegaExpectation e;
  e.omega_size = omega_size_formula(n, alphabet);
  e.undefined = power(alphabet, n - 2);
  e.theta_size = h_inhomogeneous(n, alphabet);
  for (int j = 0; j <= alphabet - 2; ++j) {
    const ExactInt ways = binomial(n + j - 1, j);
    e.bucket[j] = ways * count_g(n, alphabet - j);
    e.theta_bucket[j] = ways * count_h(n, alphabet - j);
  }
  return e;
}

}  // namespace shiftpat
