#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motif {

enum class ErrorCode {
  // Input errors: bad files, invalid specifications, unsupported requests.
  Parse,
  OverlappingBlocks,
  EmptyBlock,
  BadIndex,
  MissingConstant,
  ExtraConstant,
  DimensionMismatch,
  DuplicatePoint,
  NotUniform,
  NotSingleStarred,
  RTooSmall,
  BudgetExceeded,
  InvalidArgument,
  // Internal invariant violations. Reaching one of these is a bug.
  EngineDisagreement,
  InvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that indicate a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace motif
