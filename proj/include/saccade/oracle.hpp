#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "saccade/attention.hpp"
#include "saccade/bandwidth.hpp"
#include "saccade/depth_source.hpp"
#include "saccade/metrics.hpp"

namespace saccade {

struct OracleResult {
  DepthMetrics metrics;   // after substituting focused depth
  DepthMetrics baseline;  // WAC depth as is
  AttentionMask mask;
  long selected = 0;
};

// Attention = top-N of the per-pixel error-difference field
// ||wac - gt| - |full - gt|| (|wac - full| where gt is unset), with
// N = budget.fovea_pixel_budget. Focused depth replaces WAC depth under the
// mask and the merge is evaluated against gt.
OracleResult run_photometric_oracle(const Image& wac_depth, const Image& full_depth,
                                    const Image& gt, const BandwidthBudget& budget,
                                    const EvalConfig& cfg = {});

// Attention = top-N' of |wac - gt_sparse| where N is rescaled by the share of
// pixels that carry a ground-truth sample.
OracleResult run_true_oracle(const Image& wac_depth, const Image& full_depth,
                             const Image& gt_sparse, const BandwidthBudget& budget,
                             const EvalConfig& cfg = {});

// Error field used by the photometric oracle.
AttentionMask photometric_error_field(const Image& wac_depth, const Image& full_depth,
                                      const Image& gt);

// Captures img at the budget's target bandwidth, runs the external depth
// producer on it and evaluates against gt.
DepthMetrics run_equiangular_baseline(const Image& img, const BandwidthBudget& budget,
                                      DepthSource& depth_fn, const Image& gt,
                                      const std::string& name, const EvalConfig& cfg = {},
                                      const ResampleOptions& resample = {});

enum class OracleMode { kPhotometric, kTrue };

// Dataset-level run configured from JSON:
// {
//   "wac_depth_dir", "full_depth_dir", "gt_dir",      required
//   "images_dir", "target_depth_dir", "depth_command", optional baseline
//   "budget": {"full_bw", "target_bw", "wac_bw"},
//   "output_csv", "min_depth", "max_depth", "median_scaling", "jobs"
// }
struct OracleDatasetConfig {
  std::filesystem::path wac_depth_dir;
  std::filesystem::path full_depth_dir;
  std::filesystem::path gt_dir;
  std::optional<std::filesystem::path> images_dir;
  std::optional<std::filesystem::path> target_depth_dir;
  std::optional<std::string> depth_command;
  std::filesystem::path work_dir = "oracle_work";
  double full_bw = 70.0;
  double target_bw = 35.0;
  double wac_bw = 30.0;
  std::filesystem::path output_csv;
  EvalConfig eval;
  int jobs = 1;

  static OracleDatasetConfig from_json(const nlohmann::json& j,
                                       const std::filesystem::path& base_dir);
  nlohmann::json to_json() const;
};

// CSV with columns method,image,abs_rel,...,delta3: one row per image and
// method, then a "mean" row per method.
std::string run_oracle_dataset(const OracleDatasetConfig& cfg, OracleMode mode);

std::string bandwidth_label(const std::string& prefix, double bw);

}  // namespace saccade
