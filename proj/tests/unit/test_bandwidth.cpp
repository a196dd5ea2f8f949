#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "reference.hpp"
#include "saccade/bandwidth.hpp"
#include "saccade/error.hpp"
#include "saccade/synthetic.hpp"

namespace saccade {
namespace {

using testing::Rng;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kUsage;
}

double mean_abs_diff(const Image& a, const Image& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.samples().size(); ++i) s += std::abs(a.samples()[i] - b.samples()[i]);
  return s / static_cast<double>(a.samples().size());
}

TEST(SimulateBandwidth, IdentityIsBitExact) {
  Rng rng(1);
  for (int c : {1, 3}) {
    const Image img = testing::random_color(rng, 13, 7, c);
    const BandwidthResult r = simulate_bandwidth(img, 70, 70);
    EXPECT_EQ(r.image, img);
    EXPECT_EQ(r.realized_bw(), 70.0);
  }
}

TEST(SimulateBandwidth, ConstantsSurvive) {
  const Image img(40, 30, 3, ImageKind::kColor, 0.37f);
  const Image out = simulate_bandwidth(img, 70, 7).image;
  ASSERT_TRUE(out.same_grid(img));
  for (float v : out.samples()) EXPECT_NEAR(v, 0.37f, 1e-6);
}

TEST(SimulateBandwidth, CheckerboardHalvesToUniformGray) {
  Image img(4, 4, 1);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) img.at(r, c) = static_cast<float>((r + c) % 2);
  for (auto down : {DownsampleKernel::kBox, DownsampleKernel::kBilinear}) {
    const BandwidthResult res = simulate_bandwidth(img, 70, 35, {down, UpsampleKernel::kBilinear});
    EXPECT_EQ(res.intermediate_width, 2);
    EXPECT_EQ(res.intermediate_height, 2);
    for (float v : res.image.samples()) EXPECT_FLOAT_EQ(v, 0.5f);
  }
}

TEST(Downsample, BoxUsesFractionalPixelAreas) {
  // 5 -> 2 columns: spans [0,2.5) and [2.5,5).
  Image row(5, 1, 1, ImageKind::kColor, std::vector<float>{0.1f, 0.2f, 0.3f, 0.4f, 0.5f});
  const Image d = downsample(row, 2, 1, DownsampleKernel::kBox);
  EXPECT_NEAR(d.at(0, 0), (0.1 + 0.2 + 0.5 * 0.3) / 2.5, 1e-7);
  EXPECT_NEAR(d.at(0, 1), (0.5 * 0.3 + 0.4 + 0.5) / 2.5, 1e-7);
}

TEST(SimulateBandwidth, RecordsRealizedBandwidthAfterRounding) {
  const Image img(100, 10, 1, ImageKind::kColor, 0.5f);
  const BandwidthResult r = simulate_bandwidth(img, 70, 31.3);  // 44.71 -> 45, 4.47 -> 4
  EXPECT_EQ(r.intermediate_width, 45);
  EXPECT_EQ(r.intermediate_height, 4);
  EXPECT_DOUBLE_EQ(r.realized_bw_x, 70.0 * 45 / 100);
  EXPECT_DOUBLE_EQ(r.realized_bw_y, 70.0 * 4 / 10);
}

TEST(SimulateBandwidth, RejectsBadBandwidths) {
  const Image img(4, 4, 1);
  EXPECT_EQ(code_of([&] { simulate_bandwidth(img, 35, 70); }), ErrorCode::kInvalidBandwidth);
  EXPECT_EQ(code_of([&] { simulate_bandwidth(img, 70, 0); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([&] { simulate_bandwidth(img, -1, -2); }), ErrorCode::kDomain);
  const Image depth(4, 4, 1, ImageKind::kDepth, 5.0f);
  EXPECT_EQ(code_of([&] { simulate_bandwidth(depth, 70, 35); }), ErrorCode::kDomain);
}

TEST(SimulateBandwidth, InformationLossGrowsAsBandwidthDrops) {
  double loss35 = 0.0, loss15 = 0.0;
  for (const SyntheticScene& s : make_scene_set(8, 77)) {
    loss35 += mean_abs_diff(s.color, simulate_bandwidth(s.color, 70, 35).image);
    loss15 += mean_abs_diff(s.color, simulate_bandwidth(s.color, 70, 15).image);
  }
  EXPECT_GT(loss35, 0.0);
  EXPECT_GE(loss15, loss35);
}

TEST(CameraModel, ScaledKeepsFieldOfView) {
  const CameraModel cam = CameraModel::kitti_like(1242, 375);
  EXPECT_EQ(cam.angular_samples(), 1242L * 375);
  EXPECT_NEAR(cam.focal_px(), CameraModel::kKittiFocalPx, 1e-9);
  const CameraModel half = cam.scaled(35);
  EXPECT_EQ(half.width, 621);
  EXPECT_EQ(half.height, 188);
  EXPECT_NEAR(half.focal_px(), CameraModel::kKittiFocalPx / 2, 1e-9);
  EXPECT_NEAR(half.cx, (cam.cx + 0.5) / 2 - 0.5, 1e-12);
}

TEST(MakeBudget, ReferenceBandwidthPairs) {
  const CameraModel cam = CameraModel::kitti_like(1242, 375);
  EXPECT_NEAR(make_budget(cam, 35, 30).fovea_area_fraction, 325.0 / 4900.0, 1e-15);
  EXPECT_EQ(make_budget(cam, 70, 70).fovea_area_fraction, 0.0);
  EXPECT_EQ(make_budget(cam, 70, 70).fovea_pixel_budget, 0);
  const BandwidthBudget b = make_budget(cam, 31.30, 27);
  EXPECT_NEAR(b.fovea_area_fraction, 0.0512, 5e-5);
  EXPECT_EQ(b.fovea_pixel_budget, std::lround(b.fovea_area_fraction * 1242.0 * 375.0));
}

TEST(MakeBudget, ConservesAngularSamples) {
  const CameraModel cam = CameraModel::kitti_like(640, 192);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double wac = rng.uniform(1, 70);
    const double target = rng.uniform(wac, 70);
    const BandwidthBudget b = make_budget(cam, target, wac);
    const double lhs = b.wac_bw * b.wac_bw + b.fovea_area_fraction * b.full_bw * b.full_bw;
    const double rhs = b.target_bw * b.target_bw;
    EXPECT_LE(std::abs(lhs - rhs), 2 * std::numeric_limits<double>::epsilon() * rhs);
    EXPECT_GE(b.fovea_area_fraction, 0.0);
    EXPECT_LE(b.fovea_area_fraction, 1.0);
  }
}

TEST(MakeBudget, RejectsOrderingViolations) {
  const CameraModel cam = CameraModel::kitti_like(64, 64);
  EXPECT_EQ(code_of([&] { make_budget(cam, 30, 35); }), ErrorCode::kInvalidBudget);
  EXPECT_EQ(code_of([&] { make_budget(cam, 80, 30); }), ErrorCode::kInvalidBudget);
  EXPECT_EQ(code_of([&] { make_budget(cam, 30, 0); }), ErrorCode::kInvalidBudget);
}

TEST(FoveaCount, FloorsAndReportsRemainder) {
  BandwidthBudget b;
  b.fovea_pixel_budget = 400;
  EXPECT_EQ(fovea_count(b, {10, 10}).count, 4);
  EXPECT_EQ(fovea_count(b, {10, 10}).remainder_pixels, 0);
  b.fovea_pixel_budget = 450;
  EXPECT_EQ(fovea_count(b, {10, 10}).count, 4);
  EXPECT_EQ(fovea_count(b, {10, 10}).remainder_pixels, 50);
  b.fovea_pixel_budget = 99;
  EXPECT_EQ(fovea_count(b, {10, 10}).count, 0);
  EXPECT_EQ(code_of([&] { fovea_count(b, {0, 10}); }), ErrorCode::kDomain);
}

TEST(FoveaCount, NeverExceedsBudget) {
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    BandwidthBudget b;
    b.fovea_pixel_budget = rng.integer(0, 100000);
    const WindowSize w{rng.integer(1, 40), rng.integer(1, 40)};
    const FoveaAllocation a = fovea_count(b, w);
    EXPECT_LE(a.count * w.area(), b.fovea_pixel_budget);
    EXPECT_LT(a.remainder_pixels, w.area());
  }
}

}  // namespace
}  // namespace saccade
