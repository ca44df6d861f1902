#pragma once

#include <stdexcept>
#include <string>

namespace mfhh {

enum class ErrorKind {
  SyntaxError,
  NotInvertible,
  CoefficientError,
  NoPositiveSolution,
  DegenerateCharacter,
  NotIsolated,
  NonterminatingFamily,
  WindowMismatch,
  UnknownFamily,
  SchemaError,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every recoverable failure in the library.
/// `kind()` lets callers (notably the CLI) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for malformed user input as opposed to engine failures.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::SyntaxError:
      case ErrorKind::NotInvertible:
      case ErrorKind::CoefficientError:
      case ErrorKind::UnknownFamily:
      case ErrorKind::SchemaError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::CoefficientError: return "CoefficientError";
    case ErrorKind::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorKind::DegenerateCharacter: return "DegenerateCharacter";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NonterminatingFamily: return "NonterminatingFamily";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Error";
}

}  // namespace mfhh
