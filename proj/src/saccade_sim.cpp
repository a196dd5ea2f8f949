#include "saccade/saccade_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "saccade/error.hpp"

namespace saccade {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;
// Slack for comparing accumulated millisecond sums.
constexpr double kTimeEps = 1e-9;

}  // namespace

void MirrorModel::validate() const {
  require(max_angle_deg > 0.0, ErrorCode::kDomain, "mirror max angle must be positive");
  require(settle_ms >= 0.0, ErrorCode::kDomain, "mirror settle time must be nonnegative");
}

MirrorVoltage direction_to_voltage(PixelCoord peak, const CameraModel& wac,
                                   const MirrorModel& mirror) {
  wac.validate();
  mirror.validate();
  require(peak.row >= 0 && peak.row < wac.height && peak.col >= 0 && peak.col < wac.width,
          ErrorCode::kOutOfRange, "peak lies outside the WAC grid");
  const double f = wac.focal_px();
  const double theta = std::atan((peak.col - wac.cx) / f) * kDeg;
  const double phi = std::atan((peak.row - wac.cy) / f) * kDeg;
  if (std::abs(theta) > mirror.max_angle_deg || std::abs(phi) > mirror.max_angle_deg) {
    fail(ErrorCode::kOutOfRange,
         "direction (" + std::to_string(theta) + ", " + std::to_string(phi) +
             ") deg exceeds mirror range " + std::to_string(mirror.max_angle_deg));
  }
  return {theta / mirror.max_angle_deg, phi / mirror.max_angle_deg};
}

PixelPoint voltage_to_direction(MirrorVoltage v, const CameraModel& wac,
                                const MirrorModel& mirror) {
  wac.validate();
  mirror.validate();
  require(std::abs(v.theta) <= 1.0 && std::abs(v.phi) <= 1.0, ErrorCode::kOutOfRange,
          "mirror voltage outside [-1, 1]");
  const double f = wac.focal_px();
  return {wac.cy + f * std::tan(v.phi * mirror.max_angle_deg / kDeg),
          wac.cx + f * std::tan(v.theta * mirror.max_angle_deg / kDeg)};
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kWacCapture: return "wac_capture";
    case EventKind::kMirrorMove: return "mirror_move";
    case EventKind::kTeleCapture: return "tele_capture";
  }
  return "unknown";
}

int max_feasible_fovea(const MirrorModel& mirror, const FrameTiming& timing) {
  const double spare = timing.frame_period_ms - timing.wac_exposure_ms;
  if (spare < -kTimeEps) return 0;
  const double per_fovea = mirror.settle_ms + timing.tele_exposure_ms;
  if (per_fovea <= 0.0) return std::numeric_limits<int>::max();
  return static_cast<int>(std::floor(std::max(0.0, spare) / per_fovea + kTimeEps));
}

FrameSchedule build_schedule(const FoveaPlan& plan, const MirrorModel& mirror,
                             const FrameTiming& timing) {
  mirror.validate();
  require(timing.wac_exposure_ms >= 0.0 && timing.tele_exposure_ms >= 0.0 &&
              timing.frame_period_ms >= 0.0,
          ErrorCode::kDomain, "schedule times must be nonnegative");
  FrameSchedule s;
  s.frame_period_ms = timing.frame_period_ms;
  double t = 0.0;
  const auto push = [&](EventKind kind, double duration, std::optional<int> index) {
    s.events.push_back({kind, t, duration, index, std::nullopt});
    t += duration;
  };
  push(EventKind::kWacCapture, timing.wac_exposure_ms, std::nullopt);
  for (const Fovea& f : plan.fovea) {
    push(EventKind::kMirrorMove, mirror.settle_ms, f.order);
    push(EventKind::kTeleCapture, timing.tele_exposure_ms, f.order);
  }
  s.total_ms = t;
  if (s.total_ms > timing.frame_period_ms + kTimeEps) {
    const int achievable = max_feasible_fovea(mirror, timing);
    throw InfeasibleRateError(
        std::to_string(plan.n()) + " fovea need " + std::to_string(s.total_ms) +
            " ms, frame period is " + std::to_string(timing.frame_period_ms) +
            " ms; at most " + std::to_string(achievable) + " fit",
        achievable);
  }
  return s;
}

void attach_voltages(FrameSchedule& schedule, const FoveaPlan& plan,
                     const CameraModel& wac, const MirrorModel& mirror) {
  for (FrameEvent& e : schedule.events) {
    if (e.kind != EventKind::kMirrorMove || !e.fovea_index) continue;
    const auto it = std::find_if(plan.fovea.begin(), plan.fovea.end(),
                                 [&](const Fovea& f) { return f.order == *e.fovea_index; });
    require(it != plan.fovea.end(), ErrorCode::kDomain,
            "schedule references a fovea missing from the plan");
    e.voltage = direction_to_voltage(it->peak, wac, mirror);
  }
}

nlohmann::json schedule_to_json(const FrameSchedule& schedule) {
  nlohmann::json events = nlohmann::json::array();
  for (const FrameEvent& e : schedule.events) {
    nlohmann::json j = {{"kind", to_string(e.kind)},
                        {"start", e.start_ms},
                        {"duration", e.duration_ms}};
    if (e.fovea_index) j["fovea_index"] = *e.fovea_index;
    if (e.voltage) j["voltage"] = {e.voltage->theta, e.voltage->phi};
    events.push_back(std::move(j));
  }
  return {{"events", std::move(events)},
          {"frame_period", schedule.frame_period_ms},
          {"total_duration", schedule.total_ms}};
}

Image simulate_frame(const Image& wac_img, const Image& full_img, const FoveaPlan& plan,
                     const BlendConfig& cfg) {
  cfg.validate();
  require(wac_img.same_grid(full_img) && wac_img.channels() == full_img.channels(),
          ErrorCode::kShape, "WAC and full images must share the WAC grid");
  if (plan.empty()) return wac_img;
  const int h = wac_img.height();
  const int w = wac_img.width();
  Image focused = wac_img;
  const int grow = cfg.feather_radius;
  for (const Fovea& f : plan.fovea) {
    const int r0 = std::max(0, f.origin.row - grow);
    const int c0 = std::max(0, f.origin.col - grow);
    const int r1 = std::min(h, f.origin.row + f.window.height + grow);
    const int c1 = std::min(w, f.origin.col + f.window.width + grow);
    for (int r = r0; r < r1; ++r) {
      for (int c = c0; c < c1; ++c) {
        for (int ch = 0; ch < wac_img.channels(); ++ch) {
          focused.at(r, c, ch) = full_img.at(r, c, ch);
        }
      }
    }
  }
  AttentionMask mask = plan_to_mask(plan, h, w);
  if (grow > 0) mask = feather(mask, grow);
  return composite(wac_img, focused, mask, cfg);
}

}  // namespace saccade
