#pragma once

#include "saccade/geometry.hpp"
#include "saccade/image.hpp"

namespace saccade {

// A capture device described by its angular sampling. pixel_pitch_inverse is
// the linear sampling density in px/mm; the total number of angular samples
// across the field of view is width * height.
struct CameraModel {
  int width = 0;
  int height = 0;
  double focal_length_mm = 0.0;
  double pixel_pitch_inverse = 0.0;
  double cx = 0.0;
  double cy = 0.0;

  // Focal length of a KITTI color camera (721.5377 px) at 70 px/mm.
  static constexpr double kKittiFocalPx = 721.5377;
  static constexpr double kKittiBandwidth = 70.0;

  // Camera with KITTI-like focal length and the principal point at the
  // image center.
  static CameraModel kitti_like(int width, int height,
                                double bandwidth = kKittiBandwidth);

  long angular_samples() const noexcept {
    return static_cast<long>(width) * height;
  }
  double focal_px() const noexcept { return focal_length_mm * pixel_pitch_inverse; }

  // Same field of view sampled at a different bandwidth: pixel grid and
  // principal point scale by to_bw / pixel_pitch_inverse, focal length in mm
  // is unchanged.
  CameraModel scaled(double to_bw) const;

  void validate() const;
};

struct BandwidthBudget {
  double full_bw = 0.0;
  double target_bw = 0.0;
  double wac_bw = 0.0;
  double fovea_area_fraction = 0.0;
  long fovea_pixel_budget = 0;
  long full_pixel_count = 0;
};

// Splits the target bandwidth between the WAC and full-resolution fovea.
// Bandwidth is a linear density, so the split is done in squared (area) units:
//   wac_bw^2 + fovea_area_fraction * full_bw^2 = target_bw^2.
BandwidthBudget make_budget(const CameraModel& full, double target_bw,
                            double wac_bw);

// Budget from a fovea area fraction directly, with target_bw derived from it.
BandwidthBudget budget_from_fraction(const CameraModel& full, double wac_bw,
                                     double fovea_area_fraction);

struct FoveaAllocation {
  long count = 0;
  long remainder_pixels = 0;
};

FoveaAllocation fovea_count(const BandwidthBudget& budget, WindowSize window);

enum class DownsampleKernel { kBox, kBilinear };
enum class UpsampleKernel { kBilinear, kNearest };

struct ResampleOptions {
  DownsampleKernel down = DownsampleKernel::kBox;
  UpsampleKernel up = UpsampleKernel::kBilinear;
};

struct BandwidthResult {
  Image image;
  int intermediate_width = 0;
  int intermediate_height = 0;
  // Bandwidth actually realized after rounding the intermediate grid.
  double realized_bw_x = 0.0;
  double realized_bw_y = 0.0;
  double realized_bw() const;
};

// Simulates capture at to_bw over the same field of view: resample to the
// intrinsics-scaled grid and back to the original pixel dimensions.
BandwidthResult simulate_bandwidth(const Image& img, double from_bw, double to_bw,
                                   const ResampleOptions& opts = {});

// Low-level resamplers, exposed for reuse and testing.
Image downsample(const Image& img, int width, int height, DownsampleKernel kernel);
Image upsample(const Image& img, int width, int height, UpsampleKernel kernel);

}  // namespace saccade
