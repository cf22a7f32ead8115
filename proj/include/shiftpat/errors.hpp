#pragma once

#include <stdexcept>
#include <string>

namespace shiftpat {

/// Malformed textual permutation, marked cycle, or word literal.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested enumeration size is above the configured bound.
class BoundExceeded : public std::out_of_range {
 public:
  explicit BoundExceeded(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace shiftpat
