// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reference.hpp"
#include "saccade/bandwidth.hpp"
#include "saccade/compositor.hpp"
#include "saccade/depth_source.hpp"
#include "saccade/error.hpp"
#include "saccade/io.hpp"
#include "saccade/metrics.hpp"
#include "saccade/oracle.hpp"
#include "saccade/pipeline.hpp"
#include "saccade/planner.hpp"
#include "saccade/saccade_sim.hpp"
#include "saccade/synthetic.hpp"

using namespace saccade;
using saccade::testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.check(false, "runtime " + std::to_string(secs) + " s over limit");
  }
  std::printf("%s  [%d] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              o.detail.empty() ? "" : " : ", o.detail.c_str());
  if (!o.ok) ++failures;
}

bool same_sig_figs(double a, double b, int digits) {
  if (a == b) return true;
  const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::fabs(b))));
  return std::llround(a * scale) == std::llround(b * scale);
}

// ---------------------------------------------------------------- 1. budget

Outcome budget_arithmetic() {
  struct Pair {
    double target, wac, expected;
  };
  // Fractions (target^2 - wac^2) / 70^2 evaluated by hand to 4 significant
  // figures.
  const Pair pairs[] = {{31.30, 27, 0.05116}, {31.30, 22, 0.1012}, {31.30, 15, 0.1540},
                        {35, 30, 0.06633},    {27, 23, 0.04082},   {8, 7, 0.003061}};
  const CameraModel cam = CameraModel::kitti_like(1242, 375);
  Outcome o;
  for (const Pair& p : pairs) {
    const BandwidthBudget b = make_budget(cam, p.target, p.wac);
    std::ostringstream s;
    s << "(70, " << p.target << ", " << p.wac << ") -> " << b.fovea_area_fraction;
    o.check(same_sig_figs(b.fovea_area_fraction, p.expected, 4), s.str());
    o.check(b.fovea_pixel_budget == std::lround(b.fovea_area_fraction * cam.angular_samples()),
            "pixel budget " + s.str());
  }
  return o;
}

// ------------------------------------------------------- 2. oracle monotonicity

Outcome oracle_monotonicity(std::string* serialized) {
  Outcome o;
  std::string out;
  const CameraModel cam = CameraModel::kitti_like(64, 64);
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const testing::DepthScene s = testing::make_depth_scene(1000 + seed, 64, seed % 2 == 1);
    for (double fraction : {0.01, 0.05, 0.15}) {
      const BandwidthBudget b = budget_from_fraction(cam, 27, fraction);
      const OracleResult r = run_true_oracle(s.wac, s.full, s.gt, b);
      const DepthMetrics& m = r.metrics;
      const DepthMetrics& w = r.baseline;
      bool ok = m.abs_rel <= w.abs_rel && m.sq_rel <= w.sq_rel && m.rmse <= w.rmse &&
                m.rmse_log <= w.rmse_log && m.delta1 >= w.delta1 && m.delta2 >= w.delta2 &&
                m.delta3 >= w.delta3;
      bool any_error = false;
      for (std::size_t i = 0; i < r.mask.size(); ++i) {
        if (r.mask[i] == 1.0f && s.gt.samples()[i] != Image::kNoDepth &&
            s.wac.samples()[i] != s.gt.samples()[i]) {
          any_error = true;
        }
      }
      if (any_error) {
        ok = ok && m.abs_rel < w.abs_rel && m.sq_rel < w.sq_rel && m.rmse < w.rmse &&
             m.rmse_log < w.rmse_log;
      }
      ok = ok && r.mask.sum() == static_cast<double>(r.selected);
      if (!ok) ++violations;
      out += metrics_csv_row(std::to_string(seed) + "@" + std::to_string(fraction), m) + "\n";
    }
  }
  o.check(violations == 0, std::to_string(violations) + " violations");
  if (serialized) *serialized = out;
  return o;
}

// -------------------------------------------------- 3. planner vs brute force

Outcome planner_equivalence(std::string* serialized) {
  Outcome o;
  Rng rng(777);
  std::string out;
  long mismatches = 0, invariant_failures = 0, cases = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    AttentionMask m(5, 5);
    for (float& v : m.values()) v = static_cast<float>(rng.integer(0, 2));
    const std::vector<float> raw(m.values().begin(), m.values().end());
    for (int win = 1; win <= 3; ++win) {
      for (long n = 0; n <= 3; ++n) {
        ++cases;
        const FoveaPlan plan = greedy_plan(m, n, {win, win});
        const auto ref = testing::reference_greedy(raw, 5, 5, n, win, win);
        bool same = plan.fovea.size() == ref.size();
        for (std::size_t k = 0; same && k < ref.size(); ++k) {
          const Fovea& f = plan.fovea[k];
          same = f.peak.row == ref[k].peak_row && f.peak.col == ref[k].peak_col &&
                 f.origin.row == ref[k].origin_row && f.origin.col == ref[k].origin_col &&
                 f.peak_value == ref[k].value && f.order == static_cast<int>(k) + 1;
        }
        if (!same) ++mismatches;

        // Monotone maxima, and no unselected pixel exceeds the last maximum.
        bool inv = true;
        for (std::size_t k = 1; k < plan.fovea.size(); ++k)
          inv = inv && plan.fovea[k - 1].peak_value >= plan.fovea[k].peak_value;
        if (!plan.empty()) {
          const float last = plan.fovea.back().peak_value;
          for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
              bool covered = false;
              for (std::size_t k = 0; k + 1 < plan.fovea.size(); ++k)
                covered = covered || plan.fovea[k].contains(r, c);
              if (!covered) inv = inv && m.at(r, c) <= last;
            }
        }
        if (!inv) ++invariant_failures;
        out += io::plan_to_json(plan).dump() + "\n";
      }
    }
  }
  o.check(mismatches == 0, std::to_string(mismatches) + "/" + std::to_string(cases) +
                               " plans differ from brute force");
  o.check(invariant_failures == 0, std::to_string(invariant_failures) + " invariant failures");
  if (serialized) *serialized = out;
  return o;
}

// ------------------------------------------------------ 4. compositor identities

Outcome compositor_identities() {
  Outcome o;
  Rng rng(4242);
  constexpr double tol = 1e-6;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int w = rng.integer(1, 16);
    const int h = rng.integer(1, 16);
    const int ch = trial % 2 ? 3 : 1;
    const Image wac = testing::random_color(rng, w, h, ch);
    const Image foc = testing::random_color(rng, w, h, ch);
    const AttentionMask m = testing::random_unit_mask(rng, w, h);

    const Image zero = composite(wac, foc, AttentionMask(w, h, MaskKind::kContinuous, 0.0f));
    const Image one = composite(wac, foc, AttentionMask(w, h, MaskKind::kContinuous, 1.0f));
    const Image half = composite(wac, foc, AttentionMask(w, h, MaskKind::kContinuous, 0.5f));
    const Image same = composite(wac, wac, m);
    const Image mixed = composite(wac, foc, m);
    for (std::size_t i = 0; i < wac.samples().size(); ++i) {
      const double a = wac.samples()[i];
      const double b = foc.samples()[i];
      worst = std::max(worst, std::fabs(zero.samples()[i] - a));
      worst = std::max(worst, std::fabs(one.samples()[i] - b));
      worst = std::max(worst, std::fabs(half.samples()[i] - 0.5 * (a + b)));
      worst = std::max(worst, std::fabs(same.samples()[i] - a));
      const double v = mixed.samples()[i];
      worst = std::max(worst, std::max(0.0, std::min(a, b) - v));
      worst = std::max(worst, std::max(0.0, v - std::max(a, b)));
    }
  }
  o.check(worst <= tol, "max deviation " + std::to_string(worst));
  return o;
}

// ------------------------------------------------------------- 5. metrics

Outcome metrics_fixtures() {
  Outcome o;
  auto depth = [](int w, std::vector<float> v) {
    return Image(w, 1, 1, ImageKind::kDepth, std::move(v));
  };
  auto near = [&](const DepthMetrics& m, std::array<double, 7> e, const std::string& what) {
    const auto a = m.as_array();
    for (int i = 0; i < 7; ++i) {
      o.check(std::fabs(a[i] - e[i]) <= 1e-4,
              what + " " + DepthMetrics::kColumns[i] + " = " + std::to_string(a[i]));
    }
  };
  near(evaluate(depth(1, {2}), depth(1, {1})), {1, 1, 1, 0.6931, 0, 0, 0}, "single pixel");
  near(evaluate(depth(2, {1, 3}), depth(2, {1, 2})), {0.25, 0.25, 0.7071, 0.2867, 0.5, 1, 1},
       "two pixels");
  const Image g = depth(4, {1.5f, 7, 22, 64});
  o.check(evaluate(g, g).as_array() == std::array<double, 7>{0, 0, 0, 0, 1, 1, 1},
          "perfect prediction not exact");
  return o;
}

// ------------------------------------------------------------- 6. schedule

Outcome schedule_feasibility() {
  Outcome o;
  auto plan_of = [](int n) {
    FoveaPlan p;
    for (int i = 0; i < n; ++i) p.fovea.push_back(Fovea{{0, i}, {0, i}, {1, 1}, 1.0f, i + 1});
    return p;
  };
  const MirrorModel mirror{10.0, 30.0};
  const FrameTiming timing{10.0, 8.0, 200.0};
  const FrameSchedule s = build_schedule(plan_of(5), mirror, timing);
  o.check(s.total_ms == 200.0, "5-fovea total " + std::to_string(s.total_ms));
  o.check(s.events.size() == 11, "5-fovea event count");
  try {
    build_schedule(plan_of(10), mirror, timing);
    o.check(false, "10 fovea accepted");
  } catch (const InfeasibleRateError& e) {
    o.check(e.achievable() == 5, "achievable " + std::to_string(e.achievable()));
  }
  return o;
}

// ----------------------------------------------------------- 7. end to end

Outcome end_to_end(std::string* serialized) {
  Outcome o;
  const SceneShape shape;
  const auto scenes = make_scene_set(10, 2021, shape);
  IntensityDepthSource depth(shape.near_m, shape.far_m);
  ComparisonConfig cfg;
  const ComparisonReport report = run_comparison(scenes, depth, cfg);
  const std::string csv = report.table_csv();
  const double sc = report.row("SaccadeCam").mean.rmse;
  const double wac = report.row("Wide Angle Camera").mean.rmse;
  o.check(csv.find("Target Resolution (35 pixels/mm)") != std::string::npos,
          "missing target row");
  o.check(sc < wac, "SaccadeCam rmse " + std::to_string(sc) + " vs WAC " + std::to_string(wac));
  if (serialized) *serialized = csv;
  return o;
}

}  // namespace

int main() {
  std::string c2, c3, c7;
  criterion(1, "budget arithmetic", 1.0, budget_arithmetic);
  criterion(2, "oracle monotonicity", 10.0, [&] { return oracle_monotonicity(&c2); });
  criterion(3, "greedy planner matches brute force", 30.0,
            [&] { return planner_equivalence(&c3); });
  criterion(4, "compositor identities", 5.0, compositor_identities);
  criterion(5, "metrics fixtures", 0.0, metrics_fixtures);
  criterion(6, "schedule feasibility", 0.0, schedule_feasibility);
  criterion(7, "end-to-end structural run", 60.0, [&] { return end_to_end(&c7); });
  criterion(8, "determinism", 0.0, [&] {
    Outcome o;
    std::string r2, r3, r7;
    oracle_monotonicity(&r2);
    planner_equivalence(&r3);
    end_to_end(&r7);
    o.check(!c2.empty() && r2 == c2, "oracle outputs differ");
    o.check(!c3.empty() && r3 == c3, "planner outputs differ");
    o.check(!c7.empty() && r7 == c7, "comparison CSV differs");
    return o;
  });
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
