#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies outside the profile or family domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Target value lies outside the image of a monotone map (mu_inverse).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A parameter violates a hard constraint (omega <= 0, excluded alpha, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A supplied custom profile is malformed (nonpositive mass, bad table).
class InvalidProfileError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at (or across) a singular point of a potential or map.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Requested level index is outside the bound-state range.
class LevelError : public Error {
 public:
  using Error::Error;
};

/// Degree or argument range exceeds the double-precision evaluation bound.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Polynomial parameters are degenerate for both series expansions.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for the given profile kind.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric procedure failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (e.g. residual imaginary part too large).
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdm
