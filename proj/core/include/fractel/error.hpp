#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fractel {

enum class ErrorKind {
  InvalidArgument,
  DomainEscape,
  NonFinite,
  MapMismatch,
  ZeroScalar,
  ZeroWitness,
  NotContractive,
  NotCovering,
  ContractionViolation,
  VerificationFailed,
  SingularMatrix,
  NotInSemigroup,
  EigOne,
  BadDigit,
  BadRational,
  ParseError,
  NotSerializable,
  UnknownFixture,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` discriminates the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fractel
