#pragma once

#include <stdexcept>
#include <string>

namespace troptoric {

// A documented precondition of an operation does not hold for its input:
// non-smooth fan, incomplete fan, unbounded polytope, wrong point count, ...
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input (JSON documents, command-line values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace troptoric
