#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdr {

enum class ErrorKind {
  DisconnectedInput,
  DegenerateInput,
  FamilyMismatch,
  ParseError,
  InvalidMatrix,
  NotMetric,
  NotRealizable,
  InvalidLeafMatrix,
  NotOneBlock,
  NotUnicyclicBoundary,
  TooSmall,
  BoundExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` distinguishes them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NotMetric: return "NotMetric";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::InvalidLeafMatrix: return "InvalidLeafMatrix";
    case ErrorKind::NotOneBlock: return "NotOneBlock";
    case ErrorKind::NotUnicyclicBoundary: return "NotUnicyclicBoundary";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bdr
