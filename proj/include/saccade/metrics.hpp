#pragma once

#include <array>
#include <span>
#include <string>

#include "saccade/image.hpp"

namespace saccade {

// Column order used in every report: abs_rel, sq_rel, rmse, rmse_log,
// delta1, delta2, delta3.
struct DepthMetrics {
  double abs_rel = 0.0;
  double sq_rel = 0.0;
  double rmse = 0.0;
  double rmse_log = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  long valid_pixels = 0;

  static constexpr std::array<const char*, 7> kColumns = {
      "abs_rel", "sq_rel", "rmse", "rmse_log", "delta1", "delta2", "delta3"};

  std::array<double, 7> as_array() const {
    return {abs_rel, sq_rel, rmse, rmse_log, delta1, delta2, delta3};
  }
};

struct EvalConfig {
  double min_depth = 1e-3;
  double max_depth = 80.0;
  bool median_scaling = false;

  void validate() const;
};

// Eigen-style depth metrics over pixels whose ground truth is set (non-zero)
// and inside [min_depth, max_depth]; predictions are clamped to that range.
// delta_i counts max(p/g, g/p) < 1.25^i strictly.
DepthMetrics evaluate(const Image& pred, const Image& gt, const EvalConfig& cfg = {});

// pred * median(gt) / median(pred) over pixels where both are positive.
Image median_scale(const Image& pred, const Image& gt);

// Per-field mean over a batch, accumulated in the order given.
DepthMetrics mean_metrics(std::span<const DepthMetrics> batch);

// "label,abs_rel,...,delta3" with 6 fixed decimals.
std::string metrics_csv_header(const std::string& label_column);
std::string metrics_csv_row(const std::string& label, const DepthMetrics& m);

}  // namespace saccade
