#pragma once

#include <stdexcept>
#include <string>

namespace mgt {

enum class ErrorKind {
  ParentMismatch,
  ShapeMismatch,
  CapExceeded,
  NotDivisible,
  InvalidForm,
  InvalidCocycle,
  EvenPrime,
  NotSquareOrder,
  NoSolution,
  HexagonViolation,
  RelationViolation,
  NonScalarNorm,
  ParseError,
  VerificationFailure,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::NotSquareOrder: return "NotSquareOrder";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::HexagonViolation: return "HexagonViolation";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::NonScalarNorm: return "NonScalarNorm";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace mgt
