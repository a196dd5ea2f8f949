#include "saccade/image.hpp"

#include <cmath>
#include <string>

#include "saccade/error.hpp"

namespace saccade {

namespace {

void check_dims(int width, int height, int channels) {
  require(width > 0 && height > 0, ErrorCode::kShape,
          "image dimensions must be positive, got " + std::to_string(width) +
              "x" + std::to_string(height));
  require(channels == 1 || channels == 3, ErrorCode::kShape,
          "image must have 1 or 3 channels, got " + std::to_string(channels));
}

}  // namespace

Image::Image(int width, int height, int channels, ImageKind kind, float fill)
    : width_(width), height_(height), channels_(channels), kind_(kind) {
  check_dims(width, height, channels);
  samples_.assign(pixel_count() * static_cast<std::size_t>(channels), fill);
}

Image::Image(int width, int height, int channels, ImageKind kind,
             std::vector<float> samples)
    : width_(width),
      height_(height),
      channels_(channels),
      kind_(kind),
      samples_(std::move(samples)) {
  check_dims(width, height, channels);
  require(samples_.size() == pixel_count() * static_cast<std::size_t>(channels),
          ErrorCode::kShape, "sample count does not match image dimensions");
}

void check_depth(const Image& img, const char* what) {
  require(!img.empty(), ErrorCode::kShape, std::string(what) + " is empty");
  require(img.channels() == 1, ErrorCode::kShape,
          std::string(what) + " must be single-channel depth");
  for (float v : img.samples()) {
    require(std::isfinite(v), ErrorCode::kDomain,
            std::string(what) + " contains non-finite depth");
  }
}

}  // namespace saccade
