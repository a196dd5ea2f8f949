#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace saccade {

enum class ImageKind { kColor, kDepth, kAttention };

// Row-major interleaved float image. Color samples live in [0,1]; depth
// samples are meters, with 0 reserved for pixels that carry no ground truth.
class Image {
 public:
  static constexpr float kNoDepth = 0.0f;

  Image() = default;
  Image(int width, int height, int channels, ImageKind kind = ImageKind::kColor,
        float fill = 0.0f);
  Image(int width, int height, int channels, ImageKind kind,
        std::vector<float> samples);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  ImageKind kind() const noexcept { return kind_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }
  bool empty() const noexcept { return samples_.empty(); }

  float& at(int row, int col, int ch = 0) noexcept {
    return samples_[index(row, col, ch)];
  }
  float at(int row, int col, int ch = 0) const noexcept {
    return samples_[index(row, col, ch)];
  }

  std::span<float> samples() noexcept { return samples_; }
  std::span<const float> samples() const noexcept { return samples_; }

  bool same_grid(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Image& a, const Image& b) = default;

 private:
  std::size_t index(int row, int col, int ch) const noexcept {
    return (static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(col)) *
               static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(ch);
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  ImageKind kind_ = ImageKind::kColor;
  std::vector<float> samples_;
};

// Throws a validation error unless the image is a finite single-channel
// depth map.
void check_depth(const Image& img, const char* what);

}  // namespace saccade
