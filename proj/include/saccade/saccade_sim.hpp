#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "saccade/bandwidth.hpp"
#include "saccade/compositor.hpp"
#include "saccade/geometry.hpp"
#include "saccade/image.hpp"
#include "saccade/planner.hpp"

namespace saccade {

// Two-axis MEMS mirror with a linear voltage-to-angle response on each axis:
// angle = max_angle_deg * v, v in [-1, 1].
struct MirrorModel {
  double max_angle_deg = 10.0;
  double settle_ms = 30.0;

  void validate() const;
};

struct MirrorVoltage {
  double theta = 0.0;  // horizontal axis
  double phi = 0.0;    // vertical axis
};

// Pinhole viewing angles of a WAC pixel mapped to normalized mirror voltages.
MirrorVoltage direction_to_voltage(PixelCoord peak, const CameraModel& wac,
                                   const MirrorModel& mirror);

// Inverse of direction_to_voltage, in fractional pixel coordinates.
struct PixelPoint {
  double row = 0.0;
  double col = 0.0;
};
PixelPoint voltage_to_direction(MirrorVoltage v, const CameraModel& wac,
                                const MirrorModel& mirror);

enum class EventKind { kWacCapture, kMirrorMove, kTeleCapture };
std::string_view to_string(EventKind kind);

struct FrameEvent {
  EventKind kind = EventKind::kWacCapture;
  double start_ms = 0.0;
  double duration_ms = 0.0;
  std::optional<int> fovea_index;  // plan order, for mirror moves and captures
  std::optional<MirrorVoltage> voltage;
};

struct FrameTiming {
  double wac_exposure_ms = 10.0;
  double tele_exposure_ms = 8.0;
  double frame_period_ms = 200.0;
};

struct FrameSchedule {
  std::vector<FrameEvent> events;
  double frame_period_ms = 0.0;
  double total_ms = 0.0;
};

// wac_capture, then mirror_move + tele_capture per fovea in plan order.
// Throws InfeasibleRateError carrying the largest fovea count that fits when
// the schedule overruns the frame period.
FrameSchedule build_schedule(const FoveaPlan& plan, const MirrorModel& mirror,
                             const FrameTiming& timing);

// Largest fovea count whose schedule fits in the frame period.
int max_feasible_fovea(const MirrorModel& mirror, const FrameTiming& timing);

// Fills the voltage of every mirror move from the fovea peak directions.
void attach_voltages(FrameSchedule& schedule, const FoveaPlan& plan,
                     const CameraModel& wac, const MirrorModel& mirror);

nlohmann::json schedule_to_json(const FrameSchedule& schedule);

// One SaccadeCam frame: every fovea is a telephoto capture, simulated as a
// crop of full_img over its window (grown by the feather radius). The crops
// are blended onto wac_img under the rasterized, optionally feathered plan.
Image simulate_frame(const Image& wac_img, const Image& full_img, const FoveaPlan& plan,
                     const BlendConfig& cfg = {});

}  // namespace saccade
