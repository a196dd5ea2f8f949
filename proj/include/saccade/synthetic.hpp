#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saccade/image.hpp"

namespace saccade {

struct SyntheticScene {
  std::string name;
  Image color;  // 3-channel, channel mean encodes depth
  Image depth;  // ground truth, meters
};

struct SceneShape {
  int width = 192;
  int height = 64;
  double near_m = 2.0;
  double far_m = 60.0;
};

// Street-like procedural scene: ground plane receding to a horizon, far sky,
// box-shaped vehicles and thin poles. Color is chosen so that
// IntensityDepthSource(near_m, far_m) recovers the depth exactly from the
// full-bandwidth image. Deterministic in seed.
SyntheticScene make_street_scene(std::uint64_t seed, const SceneShape& shape = {});

// The bundled benchmark set: `count` street scenes with seeds base_seed + i.
std::vector<SyntheticScene> make_scene_set(int count = 10, std::uint64_t base_seed = 2021,
                                           const SceneShape& shape = {});

}  // namespace saccade
