#include "saccade/compositor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "saccade/error.hpp"

namespace saccade {

void BlendConfig::validate() const {
  require(gamma > 0.0 && std::isfinite(gamma), ErrorCode::kDomain,
          "gamma must be positive");
  require(feather_radius >= 0, ErrorCode::kDomain,
          "feather radius must be nonnegative");
}

Image composite(const Image& wac, const Image& focused, const AttentionMask& mask,
                const BlendConfig& cfg) {
  cfg.validate();
  require(wac.same_grid(focused) && mask.same_grid(wac), ErrorCode::kShape,
          "wac, focused and mask must share pixel dimensions");
  require(wac.channels() == focused.channels(), ErrorCode::kShape,
          "wac and focused channel counts differ");
  for (float m : mask.values()) {
    require(m >= 0.0f && m <= 1.0f, ErrorCode::kDomain,
            "blend mask values must lie in [0,1]");
  }
  const double inv_gamma = 1.0 / cfg.gamma;
  Image out(wac.width(), wac.height(), wac.channels(), wac.kind());
  const auto w = wac.samples();
  const auto f = focused.samples();
  auto o = out.samples();
  const int c = wac.channels();
  for (std::size_t p = 0; p < wac.pixel_count(); ++p) {
    const double m = mask[p];
    for (int ch = 0; ch < c; ++ch) {
      const std::size_t i = p * c + ch;
      double fv = f[i];
      if (cfg.gamma != 1.0) fv = std::pow(std::clamp(fv, 0.0, 1.0), inv_gamma);
      const double v = m * fv + (1.0 - m) * static_cast<double>(w[i]);
      o[i] = static_cast<float>(std::clamp(v, 0.0, 1.0));
    }
  }
  return out;
}

namespace {

constexpr int kFar = std::numeric_limits<int>::max() / 2;

// Chebyshev distance from every pixel to the nearest pixel where target is
// true; kFar when there is none. Two raster passes over the 8-neighborhood
// are exact for the L-infinity metric.
std::vector<int> chebyshev_distance(const std::vector<bool>& target, int w, int h) {
  std::vector<int> d(target.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = target[i] ? 0 : kFar;
  const auto at = [&](int r, int c) -> int& {
    return d[static_cast<std::size_t>(r) * w + c];
  };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int best = at(r, c);
      if (c > 0) best = std::min(best, at(r, c - 1) + 1);
      if (r > 0) {
        best = std::min(best, at(r - 1, c) + 1);
        if (c > 0) best = std::min(best, at(r - 1, c - 1) + 1);
        if (c + 1 < w) best = std::min(best, at(r - 1, c + 1) + 1);
      }
      at(r, c) = best;
    }
  }
  for (int r = h - 1; r >= 0; --r) {
    for (int c = w - 1; c >= 0; --c) {
      int best = at(r, c);
      if (c + 1 < w) best = std::min(best, at(r, c + 1) + 1);
      if (r + 1 < h) {
        best = std::min(best, at(r + 1, c) + 1);
        if (c > 0) best = std::min(best, at(r + 1, c - 1) + 1);
        if (c + 1 < w) best = std::min(best, at(r + 1, c + 1) + 1);
      }
      at(r, c) = best;
    }
  }
  return d;
}

}  // namespace

AttentionMask feather(const AttentionMask& mask, int radius) {
  require(mask.kind() == MaskKind::kBinary, ErrorCode::kDomain,
          "feather expects a binary mask");
  require(radius >= 0, ErrorCode::kDomain, "feather radius must be nonnegative");
  if (radius == 0) return mask;
  const int w = mask.width();
  const int h = mask.height();
  std::vector<bool> inside(mask.size());
  std::vector<bool> outside(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    inside[i] = mask[i] == 1.0f;
    outside[i] = !inside[i];
  }
  const std::vector<int> to_outside = chebyshev_distance(outside, w, h);
  const std::vector<int> to_inside = chebyshev_distance(inside, w, h);
  const double r = radius;
  std::vector<float> v(mask.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double value;
    if (inside[i]) {
      value = 0.5 + 0.5 * std::min<double>(to_outside[i], r) / r;
    } else if (to_inside[i] >= kFar) {
      value = 0.0;
    } else {
      value = 0.5 - 0.5 * std::min<double>(to_inside[i] - 1, r) / r;
    }
    v[i] = static_cast<float>(value);
  }
  return AttentionMask(w, h, MaskKind::kContinuous, std::move(v));
}

Image oracle_substitute(const Image& base_depth, const Image& replacement_depth,
                        const AttentionMask& mask) {
  check_depth(base_depth, "base depth");
  check_depth(replacement_depth, "replacement depth");
  require(base_depth.same_grid(replacement_depth) && mask.same_grid(base_depth),
          ErrorCode::kShape, "depth maps and mask must share pixel dimensions");
  require(mask.kind() == MaskKind::kBinary, ErrorCode::kDomain,
          "depth substitution needs a binary mask");
  Image out = base_depth;
  auto o = out.samples();
  const auto rep = replacement_depth.samples();
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (mask[i] == 1.0f) o[i] = rep[i];
  }
  return out;
}

}  // namespace saccade
