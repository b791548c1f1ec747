#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the open domain (or too close to its boundary).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A root-finding bracket does not contain a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// An integrand or objective produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit with no spread in the abscissae.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

/// Body parameters that violate positivity or strict convexity.
class InvalidBodyError : public Error {
 public:
  using Error::Error;
};

/// Malformed body description; `field()` names the offending entry.
class BodySpecError : public Error {
 public:
  BodySpecError(std::string field, const std::string& what)
      : Error("body spec field '" + field + "': " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace hilbert
