#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "saccade/image.hpp"

namespace saccade {

enum class MaskKind { kContinuous, kBinary };

// Nonnegative per-pixel attention over the WAC grid. Binary masks hold only
// 0 and 1.
class AttentionMask {
 public:
  AttentionMask() = default;
  AttentionMask(int width, int height, MaskKind kind = MaskKind::kContinuous,
                float fill = 0.0f);
  AttentionMask(int width, int height, MaskKind kind, std::vector<float> values);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  MaskKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }

  float& at(int row, int col) noexcept {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  float at(int row, int col) const noexcept {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  float operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<float> values() noexcept { return values_; }
  std::span<const float> values() const noexcept { return values_; }

  double sum() const noexcept;
  float max() const noexcept;

  bool same_grid(const Image& img) const noexcept {
    return width_ == img.width() && height_ == img.height();
  }
  bool same_grid(const AttentionMask& m) const noexcept {
    return width_ == m.width_ && height_ == m.height_;
  }

  friend bool operator==(const AttentionMask&, const AttentionMask&) = default;

 private:
  void validate() const;

  int width_ = 0;
  int height_ = 0;
  MaskKind kind_ = MaskKind::kContinuous;
  std::vector<float> values_;
};

// Conversions to and from single-channel attention images (PFM transport).
AttentionMask mask_from_image(const Image& img);
Image mask_to_image(const AttentionMask& mask);

// Color-edge attention: 3x3 Sobel gradient magnitude with replicated borders,
// channels combined by max, scaled so the maximum is 1.
AttentionMask edge_attention(const Image& img);

// Per-pixel |pred - ref|, zero where ref carries the no-data sentinel.
AttentionMask error_attention(const Image& pred, const Image& ref);

// Binary mask with exactly n ones at the n largest values. Equal values are
// ordered by row-major index, smaller first.
AttentionMask top_n_binarize(const AttentionMask& mask, long n);

// round(n * ref_sample_count / full_pixel_count).
long scale_n_for_sparse_ref(long n, long ref_sample_count, long full_pixel_count);

// Box mean over a (2r+1)^2 neighborhood with replicated borders. Radius 0
// returns the mask unchanged.
AttentionMask box_smooth(const AttentionMask& mask, int radius);

}  // namespace saccade
