#include "saccade/planner.hpp"

#include <algorithm>
#include <string>

#include "saccade/error.hpp"

namespace saccade {

namespace {

PixelCoord clamp_origin(PixelCoord peak, WindowSize window, int height, int width) {
  return {std::clamp(peak.row - window.height / 2, 0, height - window.height),
          std::clamp(peak.col - window.width / 2, 0, width - window.width)};
}

// Row-major first occurrence of the maximum.
std::size_t argmax(std::span<const float> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

struct Placement {
  PixelCoord origin;
  PixelCoord peak;
  float peak_value = 0.0f;
};

Placement place_at_peak(const AttentionMask& work, WindowSize window) {
  const std::size_t i = argmax(work.values());
  const PixelCoord peak{static_cast<int>(i / work.width()),
                        static_cast<int>(i % work.width())};
  return {clamp_origin(peak, window, work.height(), work.width()), peak, work[i]};
}

// Exhaustive scan over window origins using a summed-area table.
Placement place_by_window_sum(const AttentionMask& work, WindowSize window) {
  const int h = work.height();
  const int w = work.width();
  std::vector<double> sat(static_cast<std::size_t>(h + 1) * (w + 1), 0.0);
  const auto s = [&](int r, int c) -> double& {
    return sat[static_cast<std::size_t>(r) * (w + 1) + c];
  };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      s(r + 1, c + 1) = work.at(r, c) + s(r, c + 1) + s(r + 1, c) - s(r, c);
    }
  }
  Placement best;
  double best_sum = -1.0;
  for (int r = 0; r + window.height <= h; ++r) {
    for (int c = 0; c + window.width <= w; ++c) {
      const double sum = s(r + window.height, c + window.width) -
                         s(r, c + window.width) - s(r + window.height, c) + s(r, c);
      if (sum > best_sum) {
        best_sum = sum;
        best.origin = {r, c};
      }
    }
  }
  best.peak = best.origin;
  best.peak_value = -1.0f;
  for (int r = best.origin.row; r < best.origin.row + window.height; ++r) {
    for (int c = best.origin.col; c < best.origin.col + window.width; ++c) {
      if (work.at(r, c) > best.peak_value) {
        best.peak_value = work.at(r, c);
        best.peak = {r, c};
      }
    }
  }
  return best;
}

}  // namespace

FoveaPlan greedy_plan(const AttentionMask& mask, long n, WindowSize window,
                      PlanScoring scoring) {
  require(n >= 0, ErrorCode::kDomain, "fovea count must be nonnegative");
  require(window.height > 0 && window.width > 0, ErrorCode::kDomain,
          "fovea window must have positive area");
  if (window.height > mask.height() || window.width > mask.width()) {
    fail(ErrorCode::kInfeasible,
         "fovea window " + std::to_string(window.height) + "x" +
             std::to_string(window.width) + " does not fit the " +
             std::to_string(mask.height()) + "x" + std::to_string(mask.width()) +
             " grid");
  }
  FoveaPlan plan;
  plan.window = window;
  AttentionMask work = mask;
  for (long k = 0; k < n; ++k) {
    if (work.max() <= 0.0f) break;
    const Placement p = scoring == PlanScoring::kPeak
                            ? place_at_peak(work, window)
                            : place_by_window_sum(work, window);
    Fovea f;
    f.peak = p.peak;
    f.origin = p.origin;
    f.window = window;
    f.peak_value = p.peak_value;
    f.order = static_cast<int>(k) + 1;
    plan.fovea.push_back(f);
    for (int r = p.origin.row; r < p.origin.row + window.height; ++r) {
      for (int c = p.origin.col; c < p.origin.col + window.width; ++c) {
        work.at(r, c) = 0.0f;
      }
    }
  }
  return plan;
}

FoveaPlan plan_from_budget(const AttentionMask& mask, const BandwidthBudget& budget,
                           WindowSize window, PlanScoring scoring) {
  const FoveaAllocation alloc = fovea_count(budget, window);
  return greedy_plan(mask, alloc.count, window, scoring);
}

AttentionMask plan_to_mask(const FoveaPlan& plan, int height, int width) {
  AttentionMask out(width, height, MaskKind::kBinary);
  for (const Fovea& f : plan.fovea) {
    require(f.origin.row >= 0 && f.origin.col >= 0 &&
                f.origin.row + f.window.height <= height &&
                f.origin.col + f.window.width <= width,
            ErrorCode::kShape, "fovea window falls outside the grid");
    for (int r = f.origin.row; r < f.origin.row + f.window.height; ++r) {
      for (int c = f.origin.col; c < f.origin.col + f.window.width; ++c) {
        out.at(r, c) = 1.0f;
      }
    }
  }
  return out;
}

double coverage_score(const FoveaPlan& plan, const AttentionMask& mask) {
  const AttentionMask covered = plan_to_mask(plan, mask.height(), mask.width());
  double total = 0.0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (covered[i] == 1.0f) total += mask[i];
  }
  return total;
}

}  // namespace saccade
