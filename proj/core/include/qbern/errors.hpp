#pragma once

#include <stdexcept>
#include <string>

namespace qbern {

// A computation would exceed a configured cost cap (enumeration size, bit size, word-size modulus).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Riemann-sum profile did not stabilize to the requested number of digits.
class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (bad prime, malformed q, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qbern
