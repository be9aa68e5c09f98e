#include "sl1d/error.hpp"

namespace sl1d {

const char* kind_name(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::UndeterminedAtPrecision: return "UndeterminedAtPrecision";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotUnramified: return "NotUnramified";
    case ErrorKind::WindowViolation: return "WindowViolation";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::JumpNotBelowM: return "JumpNotBelowM";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::DegenerateLayer: return "DegenerateLayer";
    case ErrorKind::BadRepresentative: return "BadRepresentative";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sl1d
