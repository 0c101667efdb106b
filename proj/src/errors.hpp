#pragma once

#include <stdexcept>
#include <string>

namespace saktomo {

// Error categories shared between the C++ core and the C API status codes.
enum class ErrorCode {
  InvalidArgument,
  Dimension,
  ZeroRow,
  NonFinite,
  RankDeficient,
  StepOutOfRange,
  RowIndexOutOfRange,
  AveragingDisabled,
  Overflow,
  NotErgodic,
  UnsupportedOrder,
  Config,
  Io,
  NoiseInStrictMode,
  DiagnosticFailure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace saktomo
