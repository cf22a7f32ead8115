#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftpat {

/// Unbounded signed integer. Counting formulas alternate in sign, so the
/// intermediate values need a sign even though every final count is >= 0.
using ExactInt = boost::multiprecision::cpp_int;

ExactInt binomial(std::int64_t n, std::int64_t k);
ExactInt power(std::int64_t base, std::int64_t exponent);

inline std::string to_string(const ExactInt& value) { return value.str(); }

}  // namespace shiftpat
