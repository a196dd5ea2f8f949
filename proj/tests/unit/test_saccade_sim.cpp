#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "reference.hpp"
#include "saccade/error.hpp"
#include "saccade/saccade_sim.hpp"

namespace saccade {
namespace {

using testing::Rng;

FoveaPlan line_of_fovea(int n) {
  FoveaPlan plan;
  plan.window = {2, 2};
  for (int i = 0; i < n; ++i)
    plan.fovea.push_back(Fovea{{1, 2 * i}, {0, 2 * i}, {2, 2}, 1.0f, i + 1});
  return plan;
}

TEST(MirrorMapping, BoresightIsZeroVoltage) {
  CameraModel cam = CameraModel::kitti_like(101, 51);
  const MirrorVoltage v = direction_to_voltage({25, 50}, cam, MirrorModel{});
  EXPECT_DOUBLE_EQ(v.theta, 0.0);
  EXPECT_DOUBLE_EQ(v.phi, 0.0);
}

TEST(MirrorMapping, RangeEndpointIsUnitVoltage) {
  const CameraModel cam = CameraModel::kitti_like(201, 101);
  MirrorModel mirror;
  mirror.max_angle_deg = std::atan((200 - cam.cx) / cam.focal_px()) * 180.0 / std::numbers::pi;
  const MirrorVoltage v = direction_to_voltage({50, 200}, cam, mirror);
  EXPECT_NEAR(v.theta, 1.0, 1e-12);
  EXPECT_NEAR(v.phi, 0.0, 1e-12);
  const MirrorVoltage left = direction_to_voltage({50, 0}, cam, mirror);
  EXPECT_NEAR(left.theta, -1.0, 1e-12);
}

TEST(MirrorMapping, UnreachableDirectionIsOutOfRange) {
  const CameraModel cam = CameraModel::kitti_like(1242, 375);
  MirrorModel mirror;
  mirror.max_angle_deg = 5.0;
  try {
    direction_to_voltage({187, 1241}, cam, mirror);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  EXPECT_THROW(direction_to_voltage({400, 10}, cam, MirrorModel{}), Error);
}

TEST(MirrorMapping, RoundTripWithinHalfPixel) {
  Rng rng(31);
  const CameraModel cam = CameraModel::kitti_like(400, 200);
  MirrorModel mirror;
  mirror.max_angle_deg = 20.0;
  for (int trial = 0; trial < 500; ++trial) {
    const PixelCoord p{rng.integer(0, 199), rng.integer(0, 399)};
    const PixelPoint back = voltage_to_direction(direction_to_voltage(p, cam, mirror), cam, mirror);
    EXPECT_LT(std::abs(back.row - p.row), 0.5);
    EXPECT_LT(std::abs(back.col - p.col), 0.5);
  }
}

TEST(Schedule, FiveFoveaFitExactly) {
  const FrameSchedule s = build_schedule(line_of_fovea(5), MirrorModel{}, FrameTiming{});
  EXPECT_DOUBLE_EQ(s.total_ms, 200.0);
  EXPECT_DOUBLE_EQ(s.frame_period_ms, 200.0);
  ASSERT_EQ(s.events.size(), 11u);
  EXPECT_EQ(s.events[0].kind, EventKind::kWacCapture);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(s.events[1 + 2 * i].kind, EventKind::kMirrorMove);
    EXPECT_EQ(s.events[2 + 2 * i].kind, EventKind::kTeleCapture);
    EXPECT_EQ(s.events[1 + 2 * i].fovea_index, s.events[2 + 2 * i].fovea_index);
    EXPECT_EQ(*s.events[2 + 2 * i].fovea_index, i + 1);
  }
  EXPECT_EQ(max_feasible_fovea(MirrorModel{}, FrameTiming{}), 5);
}

TEST(Schedule, TenFoveaOverrunCarriesAchievableCount) {
  try {
    build_schedule(line_of_fovea(10), MirrorModel{}, FrameTiming{});
    FAIL();
  } catch (const InfeasibleRateError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleRate);
    EXPECT_EQ(e.achievable(), 5);
  }
}

TEST(Schedule, EmptyPlanIsWacOnly) {
  const FrameSchedule s = build_schedule(FoveaPlan{}, MirrorModel{}, FrameTiming{});
  ASSERT_EQ(s.events.size(), 1u);
  EXPECT_EQ(s.events[0].kind, EventKind::kWacCapture);
  EXPECT_DOUBLE_EQ(s.total_ms, 10.0);
}

TEST(Schedule, TimelineProperties) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    MirrorModel mirror;
    mirror.settle_ms = rng.uniform(0.5, 40);
    FrameTiming t;
    t.wac_exposure_ms = rng.uniform(0.5, 20);
    t.tele_exposure_ms = rng.uniform(0.5, 20);
    t.frame_period_ms = rng.uniform(50, 400);
    const int fit = max_feasible_fovea(mirror, t);
    for (int n = 0; n <= fit + 2; ++n) {
      if (n > fit) {
        EXPECT_THROW(build_schedule(line_of_fovea(n), mirror, t), InfeasibleRateError);
        continue;
      }
      const FrameSchedule s = build_schedule(line_of_fovea(n), mirror, t);
      double sum = 0.0;
      for (std::size_t i = 0; i < s.events.size(); ++i) {
        sum += s.events[i].duration_ms;
        if (i > 0) {
          EXPECT_GT(s.events[i].start_ms, s.events[i - 1].start_ms);
          EXPECT_NEAR(s.events[i].start_ms,
                      s.events[i - 1].start_ms + s.events[i - 1].duration_ms, 1e-9);
        }
      }
      EXPECT_NEAR(sum, s.total_ms, 1e-9);
      EXPECT_LE(s.total_ms, t.frame_period_ms + 1e-9);
    }
  }
}

TEST(Schedule, NegativeTimesRejected) {
  FrameTiming t;
  t.tele_exposure_ms = -1;
  EXPECT_THROW(build_schedule(FoveaPlan{}, MirrorModel{}, t), Error);
  MirrorModel m;
  m.max_angle_deg = 0;
  EXPECT_THROW(build_schedule(FoveaPlan{}, m, FrameTiming{}), Error);
}

TEST(Schedule, VoltagesAttachToMoves) {
  const CameraModel cam = CameraModel::kitti_like(12, 4);
  const FoveaPlan plan = line_of_fovea(3);
  FrameSchedule s = build_schedule(plan, MirrorModel{}, FrameTiming{});
  attach_voltages(s, plan, cam, MirrorModel{});
  for (const FrameEvent& e : s.events)
    EXPECT_EQ(e.voltage.has_value(), e.kind == EventKind::kMirrorMove);
  const nlohmann::json j = schedule_to_json(s);
  EXPECT_EQ(j["total_duration"], 124.0);
  EXPECT_EQ(j["events"].size(), 7u);
  EXPECT_EQ(j["events"][1]["kind"], "mirror_move");
  EXPECT_TRUE(j["events"][1].contains("voltage"));
  EXPECT_FALSE(j["events"][0].contains("fovea_index"));
}

TEST(SimulateFrame, EmptyAndFullPlans) {
  Rng rng(33);
  const Image wac = testing::random_color(rng, 9, 7, 3);
  const Image full = testing::random_color(rng, 9, 7, 3);
  EXPECT_EQ(simulate_frame(wac, full, FoveaPlan{}), wac);
  FoveaPlan all;
  all.fovea = {Fovea{{0, 0}, {0, 0}, {7, 9}, 1.0f, 1}};
  EXPECT_EQ(simulate_frame(wac, full, all), full);
}

TEST(SimulateFrame, ChangesStayInsideWindowAndFeatherBand) {
  Rng rng(34);
  for (int radius : {0, 1, 2}) {
    const Image wac = testing::random_color(rng, 16, 12, 3);
    const Image full = testing::random_color(rng, 16, 12, 3);
    FoveaPlan plan;
    plan.fovea = {Fovea{{5, 7}, {5, 7}, {2, 2}, 1.0f, 1}};
    const Image out = simulate_frame(wac, full, plan, BlendConfig{1.0, radius});
    for (int r = 0; r < 12; ++r) {
      for (int c = 0; c < 16; ++c) {
        const bool band = r >= 5 - radius && r < 7 + radius && c >= 7 - radius && c < 9 + radius;
        const bool inside = r >= 5 && r < 7 && c >= 7 && c < 9;
        for (int ch = 0; ch < 3; ++ch) {
          if (!band) EXPECT_EQ(out.at(r, c, ch), wac.at(r, c, ch));
          if (inside && radius == 0) EXPECT_EQ(out.at(r, c, ch), full.at(r, c, ch));
        }
      }
    }
  }
}

TEST(SimulateFrame, FoveaUnionWithinBudget) {
  Rng rng(35);
  const CameraModel cam = CameraModel::kitti_like(64, 48);
  for (double target : {31.3, 35.0, 45.0}) {
    const BandwidthBudget b = make_budget(cam, target, 30);
    const AttentionMask m = testing::random_unit_mask(rng, 64, 48);
    const WindowSize win{4, 4};
    const FoveaPlan plan = plan_from_budget(m, b, win);
    const double covered = plan_to_mask(plan, 48, 64).sum() / (64.0 * 48.0);
    EXPECT_LE(covered, b.fovea_area_fraction + win.area() / (64.0 * 48.0));
  }
}

}  // namespace
}  // namespace saccade
