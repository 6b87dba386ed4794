#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orr {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  ParseError,
  LoopEdge,
  Disconnected,
  EmptyGraph,
  UnknownVertex,
  EmptySubset,
  TooLarge,
  Overflow,
  PreconditionViolated,
  FingerprintMismatch,
  DegreeTooHigh,
  WrongDegree,
  Infeasible,
  CapacityTooLarge,
  GraphMismatch,
  RRViolation,
  BudgetExceeded,
  Cancelled,
  UsageError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Internal consistency check. A failure here is a bug, not bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::Internal, what);
}

}  // namespace orr
