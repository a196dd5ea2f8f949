#pragma once

#include "saccade/attention.hpp"
#include "saccade/image.hpp"

namespace saccade {

struct BlendConfig {
  // Focused samples are mapped x -> x^(1/gamma) before blending.
  double gamma = 1.0;
  // Width in pixels of the linear ramp laid across binary mask edges.
  int feather_radius = 0;

  void validate() const;
};

// out = m * gamma_corrected(focused) + (1 - m) * wac, per pixel and channel.
Image composite(const Image& wac, const Image& focused, const AttentionMask& mask,
                const BlendConfig& cfg = {});

// Softens a binary mask with a linear ramp across its boundary, measured in
// Chebyshev distance. Inside pixels at distance d >= 1 from the nearest
// outside pixel get 0.5 + 0.5 * min(d, r) / r; outside pixels at distance
// d >= 1 from the nearest inside pixel get 0.5 - 0.5 * min(d - 1, r) / r.
AttentionMask feather(const AttentionMask& mask, int radius);

// Hard per-pixel selection: replacement where mask is 1, base elsewhere.
Image oracle_substitute(const Image& base_depth, const Image& replacement_depth,
                        const AttentionMask& mask);

}  // namespace saccade
