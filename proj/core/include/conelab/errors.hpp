#pragma once

#include <stdexcept>
#include <string>

namespace conelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: shapes that do not match a partition, linearly
/// dependent bases, out-of-range indices.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Textual input (rational strings, JSON documents) that cannot be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A documented precondition did not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A (V1)-(V3) style condition was found violated while computing, e.g. a
/// symmetrized product that is not scalar or an action that leaves V.
class ConditionViolation : public Error {
 public:
  using Error::Error;
};

/// Dimension table rejected by the sigma algorithm.
class InconsistentDims : public Error {
 public:
  using Error::Error;
};

/// A rank-3 triple that cannot carry a homogeneous cone.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed. Always a bug.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace conelab
