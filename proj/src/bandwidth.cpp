#include "saccade/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "saccade/error.hpp"

namespace saccade {

CameraModel CameraModel::kitti_like(int width, int height, double bandwidth) {
  CameraModel cam;
  cam.width = width;
  cam.height = height;
  cam.pixel_pitch_inverse = bandwidth;
  cam.focal_length_mm = kKittiFocalPx / kKittiBandwidth;
  cam.cx = (width - 1) / 2.0;
  cam.cy = (height - 1) / 2.0;
  cam.validate();
  return cam;
}

void CameraModel::validate() const {
  require(width > 0 && height > 0, ErrorCode::kDomain,
          "camera dimensions must be positive");
  require(focal_length_mm > 0.0, ErrorCode::kDomain,
          "camera focal length must be positive");
  require(pixel_pitch_inverse > 0.0, ErrorCode::kDomain,
          "camera bandwidth (px/mm) must be positive");
}

CameraModel CameraModel::scaled(double to_bw) const {
  validate();
  require(to_bw > 0.0, ErrorCode::kDomain, "bandwidth must be positive");
  const double r = to_bw / pixel_pitch_inverse;
  CameraModel out = *this;
  out.width = std::max(1, static_cast<int>(std::lround(width * r)));
  out.height = std::max(1, static_cast<int>(std::lround(height * r)));
  out.pixel_pitch_inverse = to_bw;
  out.cx = (cx + 0.5) * out.width / width - 0.5;
  out.cy = (cy + 0.5) * out.height / height - 0.5;
  return out;
}

BandwidthBudget make_budget(const CameraModel& full, double target_bw,
                            double wac_bw) {
  full.validate();
  const double full_bw = full.pixel_pitch_inverse;
  if (!(wac_bw > 0.0 && wac_bw <= target_bw && target_bw <= full_bw)) {
    fail(ErrorCode::kInvalidBudget,
         "budget requires 0 < wac_bw <= target_bw <= full_bw, got wac=" +
             std::to_string(wac_bw) + " target=" + std::to_string(target_bw) +
             " full=" + std::to_string(full_bw));
  }
  BandwidthBudget b;
  b.full_bw = full_bw;
  b.target_bw = target_bw;
  b.wac_bw = wac_bw;
  b.fovea_area_fraction =
      (target_bw * target_bw - wac_bw * wac_bw) / (full_bw * full_bw);
  b.full_pixel_count = full.angular_samples();
  b.fovea_pixel_budget = std::lround(b.fovea_area_fraction *
                                     static_cast<double>(b.full_pixel_count));
  return b;
}

BandwidthBudget budget_from_fraction(const CameraModel& full, double wac_bw,
                                     double fovea_area_fraction) {
  require(fovea_area_fraction >= 0.0 && fovea_area_fraction <= 1.0,
          ErrorCode::kInvalidBudget, "fovea area fraction must lie in [0,1]");
  const double full_bw = full.pixel_pitch_inverse;
  double target_bw =
      std::sqrt(wac_bw * wac_bw + fovea_area_fraction * full_bw * full_bw);
  target_bw = std::min(target_bw, full_bw);
  return make_budget(full, target_bw, wac_bw);
}

FoveaAllocation fovea_count(const BandwidthBudget& budget, WindowSize window) {
  require(window.height > 0 && window.width > 0, ErrorCode::kDomain,
          "fovea window must have positive area");
  FoveaAllocation a;
  a.count = budget.fovea_pixel_budget / window.area();
  a.remainder_pixels = budget.fovea_pixel_budget - a.count * window.area();
  return a;
}

double BandwidthResult::realized_bw() const {
  return std::sqrt(realized_bw_x * realized_bw_y);
}

namespace {

// Sparse 1-D resampling matrix: each output sample is a weighted sum of a
// contiguous run of input samples.
struct Taps {
  std::vector<int> first;
  std::vector<std::vector<double>> weights;
};

Taps box_taps(int in, int out) {
  Taps t;
  const double scale = static_cast<double>(in) / out;
  for (int o = 0; o < out; ++o) {
    const double lo = o * scale;
    const double hi = (o + 1) * scale;
    const int first = static_cast<int>(std::floor(lo));
    const int last = std::min(in - 1, static_cast<int>(std::ceil(hi)) - 1);
    std::vector<double> w;
    double total = 0.0;
    for (int i = first; i <= last; ++i) {
      const double overlap =
          std::min(hi, static_cast<double>(i + 1)) - std::max(lo, static_cast<double>(i));
      w.push_back(std::max(0.0, overlap));
      total += w.back();
    }
    for (double& v : w) v /= total;
    t.first.push_back(first);
    t.weights.push_back(std::move(w));
  }
  return t;
}

// Pixel-center aligned linear interpolation.
Taps linear_taps(int in, int out) {
  Taps t;
  const double scale = static_cast<double>(in) / out;
  for (int o = 0; o < out; ++o) {
    double src = (o + 0.5) * scale - 0.5;
    src = std::clamp(src, 0.0, static_cast<double>(in - 1));
    const int i0 = static_cast<int>(std::floor(src));
    const double frac = src - i0;
    if (frac == 0.0 || i0 + 1 >= in) {
      t.first.push_back(i0);
      t.weights.push_back({1.0});
    } else {
      t.first.push_back(i0);
      t.weights.push_back({1.0 - frac, frac});
    }
  }
  return t;
}

Taps nearest_taps(int in, int out) {
  Taps t;
  const double scale = static_cast<double>(in) / out;
  for (int o = 0; o < out; ++o) {
    const int i = std::min(in - 1, static_cast<int>(std::floor((o + 0.5) * scale)));
    t.first.push_back(i);
    t.weights.push_back({1.0});
  }
  return t;
}

Image apply_separable(const Image& img, int width, int height, const Taps& tx,
                      const Taps& ty) {
  const int c = img.channels();
  const int in_h = img.height();
  // Horizontal pass into double precision, then vertical pass.
  std::vector<double> tmp(static_cast<std::size_t>(in_h) * width * c, 0.0);
  for (int r = 0; r < in_h; ++r) {
    for (int x = 0; x < width; ++x) {
      const auto& w = tx.weights[x];
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
          acc += w[k] * img.at(r, tx.first[x] + static_cast<int>(k), ch);
        }
        tmp[(static_cast<std::size_t>(r) * width + x) * c + ch] = acc;
      }
    }
  }
  Image out(width, height, c, img.kind());
  for (int y = 0; y < height; ++y) {
    const auto& w = ty.weights[y];
    for (int x = 0; x < width; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
          const int r = ty.first[y] + static_cast<int>(k);
          acc += w[k] * tmp[(static_cast<std::size_t>(r) * width + x) * c + ch];
        }
        out.at(y, x, ch) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

}  // namespace

Image downsample(const Image& img, int width, int height, DownsampleKernel kernel) {
  require(width > 0 && height > 0 && width <= img.width() && height <= img.height(),
          ErrorCode::kShape, "downsample target must be non-empty and not larger");
  if (kernel == DownsampleKernel::kBox) {
    return apply_separable(img, width, height, box_taps(img.width(), width),
                           box_taps(img.height(), height));
  }
  return apply_separable(img, width, height, linear_taps(img.width(), width),
                         linear_taps(img.height(), height));
}

Image upsample(const Image& img, int width, int height, UpsampleKernel kernel) {
  require(width >= img.width() && height >= img.height(), ErrorCode::kShape,
          "upsample target must not be smaller");
  if (kernel == UpsampleKernel::kNearest) {
    return apply_separable(img, width, height, nearest_taps(img.width(), width),
                           nearest_taps(img.height(), height));
  }
  return apply_separable(img, width, height, linear_taps(img.width(), width),
                         linear_taps(img.height(), height));
}

BandwidthResult simulate_bandwidth(const Image& img, double from_bw, double to_bw,
                                   const ResampleOptions& opts) {
  if (!(from_bw > 0.0) || !(to_bw > 0.0)) {
    fail(ErrorCode::kDomain, "bandwidths must be positive");
  }
  if (to_bw > from_bw) {
    fail(ErrorCode::kInvalidBandwidth,
         "cannot raise bandwidth from " + std::to_string(from_bw) + " to " +
             std::to_string(to_bw));
  }
  require(img.kind() != ImageKind::kDepth, ErrorCode::kDomain,
          "depth maps are not resampled");
  require(!img.empty(), ErrorCode::kShape, "image is empty");

  BandwidthResult res;
  if (to_bw == from_bw) {
    res.image = img;
    res.intermediate_width = img.width();
    res.intermediate_height = img.height();
    res.realized_bw_x = res.realized_bw_y = from_bw;
    return res;
  }
  const double r = to_bw / from_bw;
  const int w = std::max(1, static_cast<int>(std::lround(img.width() * r)));
  const int h = std::max(1, static_cast<int>(std::lround(img.height() * r)));
  res.intermediate_width = w;
  res.intermediate_height = h;
  res.realized_bw_x = from_bw * w / img.width();
  res.realized_bw_y = from_bw * h / img.height();
  const Image low = downsample(img, w, h, opts.down);
  res.image = upsample(low, img.width(), img.height(), opts.up);
  return res;
}

}  // namespace saccade
