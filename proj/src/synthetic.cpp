#include "saccade/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "saccade/error.hpp"

namespace saccade {

namespace {

// Portable uniform draws; std distributions differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

struct Painter {
  const SceneShape& shape;
  std::vector<double> depth;
  std::vector<double> chroma;

  void fill(int r0, int c0, int r1, int c1, double d, double a) {
    for (int r = std::max(0, r0); r < std::min(shape.height, r1); ++r) {
      for (int c = std::max(0, c0); c < std::min(shape.width, c1); ++c) {
        const std::size_t i = static_cast<std::size_t>(r) * shape.width + c;
        depth[i] = d;
        chroma[i] = a;
      }
    }
  }
};

}  // namespace

SyntheticScene make_street_scene(std::uint64_t seed, const SceneShape& shape) {
  require(shape.width >= 16 && shape.height >= 16, ErrorCode::kShape,
          "synthetic scenes need at least 16x16 pixels");
  require(shape.near_m > 0.0 && shape.far_m > shape.near_m, ErrorCode::kDomain,
          "synthetic depth range must satisfy 0 < near < far");
  Rng rng(seed);
  const int w = shape.width;
  const int h = shape.height;
  Painter p{shape, std::vector<double>(static_cast<std::size_t>(w) * h, shape.far_m),
            std::vector<double>(static_cast<std::size_t>(w) * h, 0.0)};

  const int horizon = static_cast<int>(h * rng.uniform(0.35, 0.5));
  const auto ground_depth = [&](int row) {
    const double t = static_cast<double>(h - 1 - row) / (h - 1 - horizon);
    return shape.near_m + (shape.far_m - shape.near_m) * std::pow(std::clamp(t, 0.0, 1.0), 2.5);
  };
  // Row where the ground is at depth d.
  const auto ground_row = [&](double d) {
    const double t = std::pow((d - shape.near_m) / (shape.far_m - shape.near_m), 1.0 / 2.5);
    return static_cast<int>(std::lround(h - 1 - t * (h - 1 - horizon)));
  };
  const double sky_chroma = rng.uniform(0.0, 0.05);
  for (int r = 0; r < h; ++r) {
    const double d = r <= horizon ? shape.far_m : ground_depth(r);
    const double a = r <= horizon ? sky_chroma : 0.02;
    p.fill(r, 0, r + 1, w, d, a);
  }

  // Vehicles, painted far to near so nearer ones occlude.
  const int vehicles = rng.integer(3, 6);
  std::vector<double> vz(vehicles);
  for (double& z : vz) z = rng.uniform(8.0, 40.0);
  std::sort(vz.begin(), vz.end(), std::greater<>());
  for (double z : vz) {
    const int bw = std::clamp(static_cast<int>(std::lround(w * 2.5 / z)), 4, w / 3);
    const int bh = std::max(3, static_cast<int>(std::lround(bw * rng.uniform(0.45, 0.7))));
    const int bottom = ground_row(z);
    const int left = rng.integer(0, w - bw);
    p.fill(bottom - bh, left, bottom, left + bw, z, rng.uniform(0.03, 0.12));
  }

  // Thin poles with a small sign on top.
  const int poles = rng.integer(2, 4);
  for (int k = 0; k < poles; ++k) {
    const double z = rng.uniform(5.0, 30.0);
    const int pw = rng.integer(1, 2);
    const int ph = std::clamp(static_cast<int>(std::lround(h * 3.0 / z)), 6, h - 2);
    const int bottom = ground_row(z);
    const int col = rng.integer(2, w - 3 - pw);
    p.fill(bottom - ph, col, bottom, col + pw, z, 0.0);
    const int s = std::max(2, static_cast<int>(std::lround(w * 0.25 / z)));
    p.fill(bottom - ph - s, col - s / 2, bottom - ph, col - s / 2 + s, z, 0.1);
  }

  SyntheticScene scene;
  scene.name = "scene_" + std::to_string(seed);
  scene.color = Image(w, h, 3, ImageKind::kColor);
  scene.depth = Image(w, h, 1, ImageKind::kDepth);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * w + c;
      const double v = (p.depth[i] - shape.near_m) / (shape.far_m - shape.near_m);
      const double a = std::min({p.chroma[i], v, 1.0 - v});
      scene.color.at(r, c, 0) = static_cast<float>(v + a);
      scene.color.at(r, c, 1) = static_cast<float>(v);
      scene.color.at(r, c, 2) = static_cast<float>(v - a);
      scene.depth.at(r, c) = static_cast<float>(p.depth[i]);
    }
  }
  return scene;
}

std::vector<SyntheticScene> make_scene_set(int count, std::uint64_t base_seed,
                                           const SceneShape& shape) {
  std::vector<SyntheticScene> set;
  set.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    set.push_back(make_street_scene(base_seed + static_cast<std::uint64_t>(i), shape));
  }
  return set;
}

}  // namespace saccade
