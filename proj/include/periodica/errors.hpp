#pragma once

#include <stdexcept>
#include <string>

namespace periodica {

// Bad argument values: out-of-range period, unequal lengths, malformed input.
// The CLI maps these to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work refused because it exceeds a configured or structural limit
// (enumeration ceiling, word too long for the mask path). Exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or inconsistent cache file; message names the file. Exit code 3.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guaranteed structural property failed to hold. Reaching this is a bug
// in the caller's input derivation or in this library.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace periodica
