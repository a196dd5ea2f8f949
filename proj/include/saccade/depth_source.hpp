#pragma once

#include <filesystem>
#include <string>

#include "saccade/image.hpp"

namespace saccade {

// Produces a depth map for a color image. Depth networks live outside this
// toolkit; implementations replay precomputed predictions or shell out.
class DepthSource {
 public:
  virtual ~DepthSource() = default;
  // name identifies the frame, e.g. for looking up precomputed files.
  virtual Image predict(const Image& color, const std::string& name) = 0;
};

// Reads <dir>/<name>.pfm, ignoring the image content.
class PrecomputedDepthSource : public DepthSource {
 public:
  explicit PrecomputedDepthSource(std::filesystem::path dir) : dir_(std::move(dir)) {}
  Image predict(const Image& color, const std::string& name) override;

 private:
  std::filesystem::path dir_;
};

// Runs a shell command with {input} and {output} placeholders replaced by a
// PNG written from the image and the PFM path the command must produce.
class SubprocessDepthSource : public DepthSource {
 public:
  SubprocessDepthSource(std::string command_template, std::filesystem::path work_dir)
      : template_(std::move(command_template)), work_dir_(std::move(work_dir)) {}
  Image predict(const Image& color, const std::string& name) override;

 private:
  std::string template_;
  std::filesystem::path work_dir_;
};

// Toy color-to-depth model for synthetic scenes whose channel mean encodes
// depth linearly: depth = near + (far - near) * mean(channels).
class IntensityDepthSource : public DepthSource {
 public:
  IntensityDepthSource(double near_m, double far_m) : near_(near_m), far_(far_m) {}
  Image predict(const Image& color, const std::string& name) override;

  double near_m() const noexcept { return near_; }
  double far_m() const noexcept { return far_; }

 private:
  double near_;
  double far_;
};

}  // namespace saccade
