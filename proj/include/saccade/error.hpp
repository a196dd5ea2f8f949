#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saccade {

enum class ErrorCode {
  kUsage,
  kIo,
  kParse,
  kInvalidBandwidth,
  kDomain,
  kInvalidBudget,
  kShape,
  kBudget,
  kInfeasible,
  kEmptyEvaluation,
  kDegenerateScale,
  kOutOfRange,
  kInfeasibleRate,
};

std::string_view to_string(ErrorCode code);

// Process exit status the CLI uses for an error of this code:
// 2 usage, 3 I/O and malformed files, 4 validation.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by build_schedule when the plan does not fit into the frame period.
class InfeasibleRateError : public Error {
 public:
  InfeasibleRateError(const std::string& what, int achievable)
      : Error(ErrorCode::kInfeasibleRate, what), achievable_(achievable) {}

  int achievable() const noexcept { return achievable_; }

 private:
  int achievable_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace saccade
