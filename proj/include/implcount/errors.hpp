#pragma once

#include <stdexcept>
#include <string>

namespace implcount {

/// Arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index beyond a valid range (tree index, coefficient beyond truncation).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Brute-force enumeration refused because it exceeds the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated, e.g. a count series with a
/// non-integral coefficient. Indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace implcount
