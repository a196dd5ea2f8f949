#pragma once

#include <vector>

#include "saccade/attention.hpp"
#include "saccade/bandwidth.hpp"
#include "saccade/geometry.hpp"

namespace saccade {

struct Fovea {
  PixelCoord peak;
  // Top-left corner, clamped so the window lies inside the grid.
  PixelCoord origin;
  WindowSize window;
  float peak_value = 0.0f;
  int order = 0;  // 1-based capture order

  bool contains(int row, int col) const noexcept {
    return row >= origin.row && row < origin.row + window.height &&
           col >= origin.col && col < origin.col + window.width;
  }
  friend bool operator==(const Fovea&, const Fovea&) = default;
};

struct FoveaPlan {
  std::vector<Fovea> fovea;
  WindowSize window;

  long n() const noexcept { return static_cast<long>(fovea.size()); }
  bool empty() const noexcept { return fovea.empty(); }
  friend bool operator==(const FoveaPlan&, const FoveaPlan&) = default;
};

enum class PlanScoring {
  // Window centered on the global attention maximum.
  kPeak,
  // Window placement with the largest remaining attention sum.
  kWindowSum,
};

// Greedy peak suppression: repeatedly take the global maximum of a working
// copy of the mask (row-major tie-break), place a clamped window around it and
// zero the window. Stops early once the working mask is all zero.
FoveaPlan greedy_plan(const AttentionMask& mask, long n, WindowSize window,
                      PlanScoring scoring = PlanScoring::kPeak);

// greedy_plan with n = fovea_count(budget, window).
FoveaPlan plan_from_budget(const AttentionMask& mask, const BandwidthBudget& budget,
                           WindowSize window, PlanScoring scoring = PlanScoring::kPeak);

// Binary union of all fovea windows.
AttentionMask plan_to_mask(const FoveaPlan& plan, int height, int width);

// Sum of mask values inside the union of plan windows.
double coverage_score(const FoveaPlan& plan, const AttentionMask& mask);

}  // namespace saccade
