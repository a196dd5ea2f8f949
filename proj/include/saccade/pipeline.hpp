#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "saccade/bandwidth.hpp"
#include "saccade/compositor.hpp"
#include "saccade/depth_source.hpp"
#include "saccade/metrics.hpp"
#include "saccade/planner.hpp"
#include "saccade/synthetic.hpp"

namespace saccade {

// End-to-end comparison of equiangular captures against SaccadeCam frames:
//   full image -> WAC capture -> edge attention -> budget plan
//   -> simulate_frame -> depth -> metrics.
struct ComparisonConfig {
  double full_bw = 70.0;
  double target_bw = 35.0;
  double wac_bw = 30.0;
  WindowSize window{8, 8};
  PlanScoring scoring = PlanScoring::kPeak;
  BlendConfig blend;
  EvalConfig eval;
  ResampleOptions resample;
  int jobs = 1;

  nlohmann::json to_json() const;
};

struct ComparisonRow {
  std::string method;
  std::vector<DepthMetrics> per_scene;
  DepthMetrics mean;
};

struct ComparisonReport {
  std::vector<std::string> scene_names;
  std::vector<ComparisonRow> rows;  // full, target, WAC, SaccadeCam
  std::vector<long> fovea_per_scene;

  const ComparisonRow& row(const std::string& method_prefix) const;
  // method,abs_rel,...,delta3 with one mean row per method.
  std::string table_csv() const;
};

ComparisonReport run_comparison(std::span<const SyntheticScene> scenes,
                                DepthSource& depth_fn, const ComparisonConfig& cfg);

}  // namespace saccade
