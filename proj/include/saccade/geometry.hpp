#pragma once

namespace saccade {

struct PixelCoord {
  int row = 0;
  int col = 0;
  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Fovea window extent in WAC pixels.
struct WindowSize {
  int height = 0;
  int width = 0;
  long area() const noexcept { return static_cast<long>(height) * width; }
  friend bool operator==(const WindowSize&, const WindowSize&) = default;
};

}  // namespace saccade
