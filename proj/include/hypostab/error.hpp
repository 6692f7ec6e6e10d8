#pragma once

#include <stdexcept>
#include <string>

namespace hypostab {

enum class ErrorKind {
  Parse,
  NotHermitian,
  NonConvergence,
  NotSemiDissipative,
  ZeroDissipativePart,
  NotExplicit,
  IdenticallyZero,
  InvalidOrder,
  PrecisionTooLow,
  SamplingExhausted,
  FitDegenerate,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers
/// (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Parse errors are input problems; everything else except
  /// NonConvergence is a violated precondition.
  bool is_precondition() const noexcept {
    return kind_ != ErrorKind::Parse && kind_ != ErrorKind::NonConvergence;
  }

 private:
  ErrorKind kind_;
};

}  // namespace hypostab
