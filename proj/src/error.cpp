#include "saccade/error.hpp"

namespace saccade {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidBandwidth: return "invalid_bandwidth";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kInvalidBudget: return "invalid_budget";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kBudget: return "budget";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kEmptyEvaluation: return "empty_evaluation";
    case ErrorCode::kDegenerateScale: return "degenerate_scale";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kInfeasibleRate: return "infeasible_rate";
  }
  return "unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return 2;
    case ErrorCode::kIo:
    case ErrorCode::kParse: return 3;
    default: return 4;
  }
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace saccade
