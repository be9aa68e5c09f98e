#pragma once

#include <stdexcept>
#include <string>

namespace sl1d {

enum class ErrorKind {
  ConfigError,
  PrecisionMismatch,
  NotAUnit,
  InsufficientPrecision,
  UndeterminedAtPrecision,
  BadInput,
  NotUnramified,
  WindowViolation,
  WindowMismatch,
  EmptyFiber,
  JumpNotBelowM,
  TooLarge,
  NotCentral,
  DegenerateLayer,
  BadRepresentative,
  VerificationFailed,
  PoleAt,
  GuardExceeded,
};

const char* kind_name(ErrorKind k) noexcept;

/// All library failures. kind() identifies the error class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace sl1d
