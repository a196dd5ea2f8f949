#include "saccade/attention.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "saccade/error.hpp"

namespace saccade {

AttentionMask::AttentionMask(int width, int height, MaskKind kind, float fill)
    : width_(width), height_(height), kind_(kind) {
  require(width > 0 && height > 0, ErrorCode::kShape,
          "mask dimensions must be positive");
  values_.assign(static_cast<std::size_t>(width) * height, fill);
  validate();
}

AttentionMask::AttentionMask(int width, int height, MaskKind kind,
                             std::vector<float> values)
    : width_(width), height_(height), kind_(kind), values_(std::move(values)) {
  require(width > 0 && height > 0, ErrorCode::kShape,
          "mask dimensions must be positive");
  require(values_.size() == static_cast<std::size_t>(width) * height,
          ErrorCode::kShape, "mask value count does not match dimensions");
  validate();
}

void AttentionMask::validate() const {
  for (float v : values_) {
    require(std::isfinite(v) && v >= 0.0f, ErrorCode::kDomain,
            "attention values must be finite and nonnegative");
    if (kind_ == MaskKind::kBinary) {
      require(v == 0.0f || v == 1.0f, ErrorCode::kDomain,
              "binary mask values must be 0 or 1");
    }
  }
}

double AttentionMask::sum() const noexcept {
  double s = 0.0;
  for (float v : values_) s += v;
  return s;
}

float AttentionMask::max() const noexcept {
  return values_.empty() ? 0.0f : *std::max_element(values_.begin(), values_.end());
}

AttentionMask mask_from_image(const Image& img) {
  require(img.channels() == 1, ErrorCode::kShape,
          "attention masks are single-channel");
  std::vector<float> v(img.samples().begin(), img.samples().end());
  const bool binary =
      std::all_of(v.begin(), v.end(), [](float x) { return x == 0.0f || x == 1.0f; });
  return AttentionMask(img.width(), img.height(),
                       binary ? MaskKind::kBinary : MaskKind::kContinuous,
                       std::move(v));
}

Image mask_to_image(const AttentionMask& mask) {
  return Image(mask.width(), mask.height(), 1, ImageKind::kAttention,
               std::vector<float>(mask.values().begin(), mask.values().end()));
}

AttentionMask edge_attention(const Image& img) {
  require(!img.empty(), ErrorCode::kShape, "image is empty");
  require(img.channels() == 1 || img.channels() == 3, ErrorCode::kShape,
          "edge attention needs a 1- or 3-channel image");
  const int w = img.width();
  const int h = img.height();
  const auto px = [&](int r, int c, int ch) {
    return static_cast<double>(
        img.at(std::clamp(r, 0, h - 1), std::clamp(c, 0, w - 1), ch));
  };
  std::vector<float> mag(static_cast<std::size_t>(w) * h, 0.0f);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double best = 0.0;
      for (int ch = 0; ch < img.channels(); ++ch) {
        const double gx = (px(r - 1, c + 1, ch) + 2 * px(r, c + 1, ch) + px(r + 1, c + 1, ch)) -
                          (px(r - 1, c - 1, ch) + 2 * px(r, c - 1, ch) + px(r + 1, c - 1, ch));
        const double gy = (px(r + 1, c - 1, ch) + 2 * px(r + 1, c, ch) + px(r + 1, c + 1, ch)) -
                          (px(r - 1, c - 1, ch) + 2 * px(r - 1, c, ch) + px(r - 1, c + 1, ch));
        best = std::max(best, std::hypot(gx, gy));
      }
      mag[static_cast<std::size_t>(r) * w + c] = static_cast<float>(best);
    }
  }
  const float peak = mag.empty() ? 0.0f : *std::max_element(mag.begin(), mag.end());
  if (peak > 0.0f) {
    for (float& v : mag) v /= peak;
  }
  return AttentionMask(w, h, MaskKind::kContinuous, std::move(mag));
}

AttentionMask error_attention(const Image& pred, const Image& ref) {
  check_depth(pred, "prediction");
  check_depth(ref, "reference");
  require(pred.same_grid(ref), ErrorCode::kShape,
          "prediction and reference dimensions differ");
  std::vector<float> v(pred.pixel_count(), 0.0f);
  const auto p = pred.samples();
  const auto g = ref.samples();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (g[i] != Image::kNoDepth) v[i] = std::abs(p[i] - g[i]);
  }
  return AttentionMask(pred.width(), pred.height(), MaskKind::kContinuous,
                       std::move(v));
}

AttentionMask top_n_binarize(const AttentionMask& mask, long n) {
  require(n >= 0, ErrorCode::kBudget, "top-N count must be nonnegative");
  require(n <= static_cast<long>(mask.size()), ErrorCode::kBudget,
          "top-N count " + std::to_string(n) + " exceeds pixel count " +
              std::to_string(mask.size()));
  std::vector<std::size_t> order(mask.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto before = [&](std::size_t a, std::size_t b) {
    if (mask[a] != mask[b]) return mask[a] > mask[b];
    return a < b;
  };
  std::partial_sort(order.begin(), order.begin() + n, order.end(), before);
  AttentionMask out(mask.width(), mask.height(), MaskKind::kBinary);
  auto vals = out.values();
  for (long k = 0; k < n; ++k) vals[order[static_cast<std::size_t>(k)]] = 1.0f;
  return out;
}

long scale_n_for_sparse_ref(long n, long ref_sample_count, long full_pixel_count) {
  require(full_pixel_count > 0, ErrorCode::kDomain,
          "full pixel count must be positive");
  return std::lround(static_cast<double>(n) * static_cast<double>(ref_sample_count) /
                     static_cast<double>(full_pixel_count));
}

AttentionMask box_smooth(const AttentionMask& mask, int radius) {
  require(radius >= 0, ErrorCode::kDomain, "smoothing radius must be nonnegative");
  if (radius == 0) return mask;
  const int w = mask.width();
  const int h = mask.height();
  const double norm = 1.0 / ((2 * radius + 1) * (2 * radius + 1));
  std::vector<float> v(mask.size());
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double acc = 0.0;
      for (int dr = -radius; dr <= radius; ++dr) {
        for (int dc = -radius; dc <= radius; ++dc) {
          acc += mask.at(std::clamp(r + dr, 0, h - 1), std::clamp(c + dc, 0, w - 1));
        }
      }
      v[static_cast<std::size_t>(r) * w + c] = static_cast<float>(acc * norm);
    }
  }
  return AttentionMask(w, h, MaskKind::kContinuous, std::move(v));
}

}  // namespace saccade
