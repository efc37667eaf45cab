#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsl {

enum class ErrorKind {
  InvalidInput,
  NotFullDimensional,
  InconsistentInput,
  Unbounded,
  NotFano,
  NotSmooth,
  NotComplete,
  EnumerationBudgetExceeded,
  ValidationFailed,
  DivisionByZero,
  FitFailed,
  DimensionMismatch,
  ZeroSlope,
  ZeroChi,
  NotFound,
  InvariantViolation,
};

std::string_view error_kind_name(ErrorKind kind);

/// Invalid data or violated precondition (the caller's fault) versus a broken internal
/// invariant (ours). The CLI maps these to exit codes 1 and 2.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::InvariantViolation, message);
}

}  // namespace tsl
