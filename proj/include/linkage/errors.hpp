#pragma once

#include <stdexcept>
#include <string>

namespace linkage {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad JSON, unknown edge, wrong arity).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a documented small-instance limit.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. a stage value
/// outside the previous stage's feasible set).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A workspace came out empty; the prior stage was not realizable.
class EmptyWorkspace : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

}  // namespace linkage
