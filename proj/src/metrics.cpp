#include "saccade/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "saccade/error.hpp"

namespace saccade {

void EvalConfig::validate() const {
  require(min_depth > 0.0 && max_depth > min_depth, ErrorCode::kDomain,
          "depth range must satisfy 0 < min_depth < max_depth");
}

DepthMetrics evaluate(const Image& pred_in, const Image& gt, const EvalConfig& cfg) {
  cfg.validate();
  check_depth(pred_in, "prediction");
  check_depth(gt, "ground truth");
  require(pred_in.same_grid(gt), ErrorCode::kShape,
          "prediction and ground truth dimensions differ");
  const Image pred = cfg.median_scaling ? median_scale(pred_in, gt) : pred_in;

  constexpr double t1 = 1.25;
  constexpr double t2 = 1.25 * 1.25;
  constexpr double t3 = 1.25 * 1.25 * 1.25;
  double abs_rel = 0, sq_rel = 0, sq = 0, sq_log = 0;
  long d1 = 0, d2 = 0, d3 = 0, n = 0;
  const auto p = pred.samples();
  const auto g = gt.samples();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i];
    if (gv == Image::kNoDepth || gv < cfg.min_depth || gv > cfg.max_depth) continue;
    const double pv = std::clamp(static_cast<double>(p[i]), cfg.min_depth, cfg.max_depth);
    const double diff = pv - gv;
    abs_rel += std::abs(diff) / gv;
    sq_rel += diff * diff / gv;
    sq += diff * diff;
    const double dl = std::log(pv) - std::log(gv);
    sq_log += dl * dl;
    const double ratio = std::max(pv / gv, gv / pv);
    d1 += ratio < t1;
    d2 += ratio < t2;
    d3 += ratio < t3;
    ++n;
  }
  require(n > 0, ErrorCode::kEmptyEvaluation, "no valid ground-truth pixels");
  const double inv = 1.0 / static_cast<double>(n);
  DepthMetrics m;
  m.abs_rel = abs_rel * inv;
  m.sq_rel = sq_rel * inv;
  m.rmse = std::sqrt(sq * inv);
  m.rmse_log = std::sqrt(sq_log * inv);
  m.delta1 = static_cast<double>(d1) * inv;
  m.delta2 = static_cast<double>(d2) * inv;
  m.delta3 = static_cast<double>(d3) * inv;
  m.valid_pixels = n;
  return m;
}

namespace {

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

}  // namespace

Image median_scale(const Image& pred, const Image& gt) {
  check_depth(pred, "prediction");
  check_depth(gt, "ground truth");
  require(pred.same_grid(gt), ErrorCode::kShape,
          "prediction and ground truth dimensions differ");
  std::vector<double> pv, gv;
  const auto p = pred.samples();
  const auto g = gt.samples();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > 0.0f && p[i] > 0.0f) {
      pv.push_back(p[i]);
      gv.push_back(g[i]);
    }
  }
  require(!gv.empty(), ErrorCode::kEmptyEvaluation,
          "no overlapping valid pixels for median scaling");
  const double mp = median(std::move(pv));
  require(mp > 0.0, ErrorCode::kDegenerateScale, "prediction median is zero");
  const double scale = median(std::move(gv)) / mp;
  Image out = pred;
  for (float& v : out.samples()) v = static_cast<float>(v * scale);
  return out;
}

DepthMetrics mean_metrics(std::span<const DepthMetrics> batch) {
  DepthMetrics m;
  if (batch.empty()) return m;
  for (const DepthMetrics& b : batch) {
    m.abs_rel += b.abs_rel;
    m.sq_rel += b.sq_rel;
    m.rmse += b.rmse;
    m.rmse_log += b.rmse_log;
    m.delta1 += b.delta1;
    m.delta2 += b.delta2;
    m.delta3 += b.delta3;
    m.valid_pixels += b.valid_pixels;
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  m.abs_rel *= inv;
  m.sq_rel *= inv;
  m.rmse *= inv;
  m.rmse_log *= inv;
  m.delta1 *= inv;
  m.delta2 *= inv;
  m.delta3 *= inv;
  return m;
}

std::string metrics_csv_header(const std::string& label_column) {
  std::string s = label_column;
  for (const char* c : DepthMetrics::kColumns) {
    s += ',';
    s += c;
  }
  return s;
}

std::string metrics_csv_row(const std::string& label, const DepthMetrics& m) {
  std::string s = label;
  char buf[64];
  for (double v : m.as_array()) {
    std::snprintf(buf, sizeof buf, ",%.6f", v);
    s += buf;
  }
  return s;
}

}  // namespace saccade
