#include "saccade/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "saccade/compositor.hpp"
#include "saccade/error.hpp"
#include "saccade/io.hpp"
#include "saccade/parallel.hpp"

namespace saccade {

namespace fs = std::filesystem;

namespace {

void check_triplet(const Image& wac, const Image& full, const Image& gt) {
  check_depth(wac, "WAC depth");
  check_depth(full, "full-resolution depth");
  check_depth(gt, "ground truth");
  require(wac.same_grid(full) && wac.same_grid(gt), ErrorCode::kShape,
          "oracle inputs must share pixel dimensions");
}

long valid_count(const Image& gt) {
  return static_cast<long>(std::count_if(gt.samples().begin(), gt.samples().end(),
                                         [](float v) { return v != Image::kNoDepth; }));
}

OracleResult substitute_and_evaluate(const Image& wac, const Image& full, const Image& gt,
                                     const AttentionMask& field, long n,
                                     const EvalConfig& cfg) {
  OracleResult res;
  res.baseline = evaluate(wac, gt, cfg);
  res.mask = top_n_binarize(field, n);
  res.selected = n;
  res.metrics = evaluate(oracle_substitute(wac, full, res.mask), gt, cfg);
  return res;
}

}  // namespace

AttentionMask photometric_error_field(const Image& wac, const Image& full, const Image& gt) {
  check_triplet(wac, full, gt);
  std::vector<float> v(wac.pixel_count());
  const auto w = wac.samples();
  const auto f = full.samples();
  const auto g = gt.samples();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (g[i] != Image::kNoDepth) {
      v[i] = std::abs(std::abs(w[i] - g[i]) - std::abs(f[i] - g[i]));
    } else {
      v[i] = std::abs(w[i] - f[i]);
    }
  }
  return AttentionMask(wac.width(), wac.height(), MaskKind::kContinuous, std::move(v));
}

OracleResult run_photometric_oracle(const Image& wac, const Image& full, const Image& gt,
                                    const BandwidthBudget& budget, const EvalConfig& cfg) {
  const AttentionMask field = photometric_error_field(wac, full, gt);
  return substitute_and_evaluate(wac, full, gt, field, budget.fovea_pixel_budget, cfg);
}

OracleResult run_true_oracle(const Image& wac, const Image& full, const Image& gt_sparse,
                             const BandwidthBudget& budget, const EvalConfig& cfg) {
  check_triplet(wac, full, gt_sparse);
  const long valid = valid_count(gt_sparse);
  require(valid > 0, ErrorCode::kEmptyEvaluation, "ground truth has no samples");
  const AttentionMask field = error_attention(wac, gt_sparse);
  const long n = scale_n_for_sparse_ref(budget.fovea_pixel_budget, valid,
                                        static_cast<long>(wac.pixel_count()));
  return substitute_and_evaluate(wac, full, gt_sparse, field, n, cfg);
}

DepthMetrics run_equiangular_baseline(const Image& img, const BandwidthBudget& budget,
                                      DepthSource& depth_fn, const Image& gt,
                                      const std::string& name, const EvalConfig& cfg,
                                      const ResampleOptions& resample) {
  const BandwidthResult captured =
      simulate_bandwidth(img, budget.full_bw, budget.target_bw, resample);
  const Image depth = depth_fn.predict(captured.image, name);
  require(depth.same_grid(gt), ErrorCode::kShape,
          "depth producer output does not match ground truth grid");
  return evaluate(depth, gt, cfg);
}

std::string bandwidth_label(const std::string& prefix, double bw) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s (%g pixels/mm)", prefix.c_str(), bw);
  return buf;
}

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

OracleDatasetConfig OracleDatasetConfig::from_json(const nlohmann::json& j,
                                                   const fs::path& base_dir) {
  OracleDatasetConfig c;
  try {
    c.wac_depth_dir = resolve(base_dir, j.at("wac_depth_dir").get<std::string>());
    c.full_depth_dir = resolve(base_dir, j.at("full_depth_dir").get<std::string>());
    c.gt_dir = resolve(base_dir, j.at("gt_dir").get<std::string>());
    if (j.contains("images_dir"))
      c.images_dir = resolve(base_dir, j["images_dir"].get<std::string>());
    if (j.contains("target_depth_dir"))
      c.target_depth_dir = resolve(base_dir, j["target_depth_dir"].get<std::string>());
    if (j.contains("depth_command")) c.depth_command = j["depth_command"].get<std::string>();
    if (j.contains("work_dir")) c.work_dir = resolve(base_dir, j["work_dir"].get<std::string>());
    if (j.contains("budget")) {
      const auto& b = j["budget"];
      c.full_bw = b.value("full_bw", c.full_bw);
      c.target_bw = b.value("target_bw", c.target_bw);
      c.wac_bw = b.value("wac_bw", c.wac_bw);
    }
    if (j.contains("output_csv"))
      c.output_csv = resolve(base_dir, j["output_csv"].get<std::string>());
    c.eval.min_depth = j.value("min_depth", c.eval.min_depth);
    c.eval.max_depth = j.value("max_depth", c.eval.max_depth);
    c.eval.median_scaling = j.value("median_scaling", c.eval.median_scaling);
    c.jobs = j.value("jobs", c.jobs);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kDomain, std::string("invalid oracle config: ") + e.what());
  }
  c.eval.validate();
  return c;
}

nlohmann::json OracleDatasetConfig::to_json() const {
  nlohmann::json j = {
      {"wac_depth_dir", wac_depth_dir.string()},
      {"full_depth_dir", full_depth_dir.string()},
      {"gt_dir", gt_dir.string()},
      {"work_dir", work_dir.string()},
      {"budget", {{"full_bw", full_bw}, {"target_bw", target_bw}, {"wac_bw", wac_bw}}},
      {"output_csv", output_csv.string()},
      {"min_depth", eval.min_depth},
      {"max_depth", eval.max_depth},
      {"median_scaling", eval.median_scaling},
      {"jobs", jobs},
  };
  if (images_dir) j["images_dir"] = images_dir->string();
  if (target_depth_dir) j["target_depth_dir"] = target_depth_dir->string();
  if (depth_command) j["depth_command"] = *depth_command;
  return j;
}

std::string run_oracle_dataset(const OracleDatasetConfig& cfg, OracleMode mode) {
  if (!fs::is_directory(cfg.wac_depth_dir))
    fail(ErrorCode::kIo, "missing directory " + cfg.wac_depth_dir.string());
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(cfg.wac_depth_dir)) {
    if (e.path().extension() == ".pfm") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  require(!names.empty(), ErrorCode::kIo,
          "no .pfm files in " + cfg.wac_depth_dir.string());

  const bool with_target =
      cfg.images_dir.has_value() && (cfg.target_depth_dir || cfg.depth_command);

  std::vector<std::string> methods = {
      bandwidth_label("Full Resolution", cfg.full_bw),
  };
  if (with_target) methods.push_back(bandwidth_label("Target Resolution", cfg.target_bw));
  methods.push_back(bandwidth_label("Wide Angle Camera", cfg.wac_bw));
  methods.push_back(mode == OracleMode::kPhotometric ? "Photometric Oracle" : "True Oracle");

  std::vector<std::vector<DepthMetrics>> rows(names.size());
  parallel_for(names.size(), cfg.jobs, [&](std::size_t i) {
    const std::string& name = names[i];
    const Image wac = io::read_pfm(cfg.wac_depth_dir / (name + ".pfm"));
    const Image full = io::read_pfm(cfg.full_depth_dir / (name + ".pfm"));
    const Image gt = io::read_pfm(cfg.gt_dir / (name + ".pfm"));
    const CameraModel cam = CameraModel::kitti_like(gt.width(), gt.height(), cfg.full_bw);
    const BandwidthBudget budget = make_budget(cam, cfg.target_bw, cfg.wac_bw);
    std::vector<DepthMetrics>& out = rows[i];
    out.push_back(evaluate(full, gt, cfg.eval));
    if (with_target) {
      const Image img = io::read_png(*cfg.images_dir / (name + ".png"));
      std::unique_ptr<DepthSource> src;
      if (cfg.target_depth_dir) {
        src = std::make_unique<PrecomputedDepthSource>(*cfg.target_depth_dir);
      } else {
        src = std::make_unique<SubprocessDepthSource>(*cfg.depth_command, cfg.work_dir);
      }
      out.push_back(run_equiangular_baseline(img, budget, *src, gt, name, cfg.eval));
    }
    const OracleResult r = mode == OracleMode::kPhotometric
                               ? run_photometric_oracle(wac, full, gt, budget, cfg.eval)
                               : run_true_oracle(wac, full, gt, budget, cfg.eval);
    out.push_back(r.baseline);
    out.push_back(r.metrics);
  });

  std::string csv = metrics_csv_header("method,image") + "\n";
  for (std::size_t m = 0; m < methods.size(); ++m) {
    std::vector<DepthMetrics> column;
    for (std::size_t i = 0; i < names.size(); ++i) {
      csv += metrics_csv_row(methods[m] + "," + names[i], rows[i][m]) + "\n";
      column.push_back(rows[i][m]);
    }
    csv += metrics_csv_row(methods[m] + ",mean", mean_metrics(column)) + "\n";
  }
  return csv;
}

}  // namespace saccade
