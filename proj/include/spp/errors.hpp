#pragma once

#include <stdexcept>
#include <string>

namespace spp {

/// Raised when caller-supplied parameters violate an operation's bounds.
/// The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a query lies outside the range a PrimeTable was sieved for.
class OutOfRangeError : public std::out_of_range {
 public:
  explicit OutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace spp
