#include "saccade/depth_source.hpp"

#include <algorithm>
#include <cstdlib>

#include "saccade/error.hpp"
#include "saccade/io.hpp"

namespace saccade {

namespace fs = std::filesystem;

Image PrecomputedDepthSource::predict(const Image&, const std::string& name) {
  const fs::path path = dir_ / (name + ".pfm");
  if (!fs::exists(path)) fail(ErrorCode::kIo, "missing precomputed depth " + path.string());
  Image depth = io::read_pfm(path, ImageKind::kDepth);
  check_depth(depth, "precomputed depth");
  return depth;
}

namespace {

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

Image SubprocessDepthSource::predict(const Image& color, const std::string& name) {
  fs::create_directories(work_dir_);
  const fs::path in = work_dir_ / (name + ".png");
  const fs::path out = work_dir_ / (name + ".pfm");
  io::write_png(in, color);
  std::error_code ec;
  fs::remove(out, ec);
  std::string cmd = template_;
  replace_all(cmd, "{input}", "'" + in.string() + "'");
  replace_all(cmd, "{output}", "'" + out.string() + "'");
  const int status = std::system(cmd.c_str());
  if (status != 0) fail(ErrorCode::kIo, "depth command failed: " + cmd);
  if (!fs::exists(out)) fail(ErrorCode::kIo, "depth command produced no output: " + cmd);
  Image depth = io::read_pfm(out, ImageKind::kDepth);
  check_depth(depth, "subprocess depth");
  return depth;
}

Image IntensityDepthSource::predict(const Image& color, const std::string&) {
  require(!color.empty(), ErrorCode::kShape, "image is empty");
  Image depth(color.width(), color.height(), 1, ImageKind::kDepth);
  const int c = color.channels();
  const auto s = color.samples();
  auto d = depth.samples();
  for (std::size_t p = 0; p < depth.pixel_count(); ++p) {
    double mean = 0.0;
    for (int ch = 0; ch < c; ++ch) mean += s[p * c + ch];
    mean /= c;
    d[p] = static_cast<float>(near_ + (far_ - near_) * std::clamp(mean, 0.0, 1.0));
  }
  return depth;
}

}  // namespace saccade
