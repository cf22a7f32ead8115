#include "shiftpat/exact_int.hpp"

#include <stdexcept>

namespace shiftpat {

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

ExactInt power(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent");
  return boost::multiprecision::pow(ExactInt(base), static_cast<unsigned>(exponent));
}

}  // namespace shiftpat
