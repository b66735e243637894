#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed values at construction time (bad edges, duplicate vertices, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotAMember : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Exhaustive enumeration refused because the sample space is too large.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A structural statement that should hold on every instance did not.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ranklab
