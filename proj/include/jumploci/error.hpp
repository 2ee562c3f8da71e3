#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

// A caller violated an operation's contract (bad input, wrong degree, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Values from two different fields met in one computation.
class FieldMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed serialized input; the message carries the offending field path.
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A numerical answer would depend on a non-generic choice (zero resultant,
// repeated eliminant roots, unstable counts). Never silently returns a count.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jumploci
