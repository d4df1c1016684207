#pragma once

#include <stdexcept>
#include <string>

namespace nnn {

// Malformed input: bad codes, mismatched degrees, unparsable text.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A size cap (element cap, vertex cap, sweep cap) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes disagreed; indicates a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nnn
