#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hocofin {

enum class ErrorCode {
  InvalidInput,
  MissingComposite,
  AssociativityViolation,
  IdentityViolation,
  InvalidComposite,
  DanglingId,
  UnknownObject,
  UnknownMorphism,
  FunctorViolation,
  SizeLimitExceeded,
  NaturalityViolation,
  SimplicialIdentityViolation,
  LevelTooLow,
  LevelMismatch,
  NotConnected,
  GroupAxiomViolation,
  NotAHomomorphism,
  UnknownLabel,
  BudgetExceeded,
  DegreeMissing,
  ComplexViolation,
  TruncationUnsound,
  IndexOutOfRange,
  NotVDC,
  CapExceeded,
  RouteMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hocofin
