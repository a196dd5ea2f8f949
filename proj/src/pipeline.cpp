#include "saccade/pipeline.hpp"

#include "saccade/attention.hpp"
#include "saccade/error.hpp"
#include "saccade/oracle.hpp"
#include "saccade/parallel.hpp"
#include "saccade/saccade_sim.hpp"

namespace saccade {

nlohmann::json ComparisonConfig::to_json() const {
  return {{"full_bw", full_bw},
          {"target_bw", target_bw},
          {"wac_bw", wac_bw},
          {"window", {window.height, window.width}},
          {"scoring", scoring == PlanScoring::kPeak ? "peak" : "window-sum"},
          {"gamma", blend.gamma},
          {"feather", blend.feather_radius},
          {"min_depth", eval.min_depth},
          {"max_depth", eval.max_depth},
          {"median_scaling", eval.median_scaling},
          {"jobs", jobs}};
}

const ComparisonRow& ComparisonReport::row(const std::string& method_prefix) const {
  for (const ComparisonRow& r : rows) {
    if (r.method.rfind(method_prefix, 0) == 0) return r;
  }
  fail(ErrorCode::kDomain, "no report row starting with " + method_prefix);
}

std::string ComparisonReport::table_csv() const {
  std::string csv = metrics_csv_header("method") + "\n";
  for (const ComparisonRow& r : rows) csv += metrics_csv_row(r.method, r.mean) + "\n";
  return csv;
}

ComparisonReport run_comparison(std::span<const SyntheticScene> scenes,
                                DepthSource& depth_fn, const ComparisonConfig& cfg) {
  require(!scenes.empty(), ErrorCode::kDomain, "comparison needs at least one scene");
  constexpr int kMethods = 4;
  std::vector<std::array<DepthMetrics, kMethods>> results(scenes.size());
  std::vector<long> fovea(scenes.size());

  parallel_for(scenes.size(), cfg.jobs, [&](std::size_t i) {
    const SyntheticScene& s = scenes[i];
    const CameraModel cam =
        CameraModel::kitti_like(s.color.width(), s.color.height(), cfg.full_bw);
    const BandwidthBudget budget = make_budget(cam, cfg.target_bw, cfg.wac_bw);
    const Image wac = simulate_bandwidth(s.color, cfg.full_bw, cfg.wac_bw, cfg.resample).image;
    const AttentionMask attention = edge_attention(wac);
    const FoveaPlan plan = plan_from_budget(attention, budget, cfg.window, cfg.scoring);
    const Image saccade = simulate_frame(wac, s.color, plan, cfg.blend);
    fovea[i] = plan.n();

    auto& out = results[i];
    out[0] = evaluate(depth_fn.predict(s.color, s.name), s.depth, cfg.eval);
    out[1] = run_equiangular_baseline(s.color, budget, depth_fn, s.depth, s.name, cfg.eval,
                                      cfg.resample);
    out[2] = evaluate(depth_fn.predict(wac, s.name), s.depth, cfg.eval);
    out[3] = evaluate(depth_fn.predict(saccade, s.name), s.depth, cfg.eval);
  });

  ComparisonReport report;
  report.fovea_per_scene = fovea;
  const std::array<std::string, kMethods> methods = {
      bandwidth_label("Full Resolution", cfg.full_bw),
      bandwidth_label("Target Resolution", cfg.target_bw),
      bandwidth_label("Wide Angle Camera", cfg.wac_bw),
      "SaccadeCam (color edges)",
  };
  for (const SyntheticScene& s : scenes) report.scene_names.push_back(s.name);
  for (int m = 0; m < kMethods; ++m) {
    ComparisonRow row;
    row.method = methods[m];
    for (const auto& r : results) row.per_scene.push_back(r[m]);
    row.mean = mean_metrics(row.per_scene);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace saccade
