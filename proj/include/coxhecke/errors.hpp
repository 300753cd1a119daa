#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxhecke {

enum class ErrorKind {
  InvalidMatrix,
  GroupNotFinite,
  RootSeparationFailure,
  GroupMismatch,
  InvalidSubset,
  NotAnAutomorphism,
  MixedLengths,
  KindMismatch,
  TheoremViolation,
  SolveFailure,
  DimensionMismatch,
  ZeroDenominator,
  DeltaUnsupported,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::GroupNotFinite: return "GroupNotFinite";
    case ErrorKind::RootSeparationFailure: return "RootSeparationFailure";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::MixedLengths: return "MixedLengths";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::SolveFailure: return "SolveFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DeltaUnsupported: return "DeltaUnsupported";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can report it in a structured way.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace coxhecke
