#include "saccade/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <png.h>

#include "saccade/error.hpp"

namespace saccade::io {

namespace fs = std::filesystem;

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorCode::kIo, "write failed for " + path.string());
}

std::string encode_pfm(const Image& img) {
  require(img.channels() == 1 || img.channels() == 3, ErrorCode::kShape,
          "PFM holds 1 or 3 channels");
  std::string out = img.channels() == 1 ? "Pf\n" : "PF\n";
  out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n-1.0\n";
  const std::size_t row_len = static_cast<std::size_t>(img.width()) * img.channels();
  const auto s = img.samples();
  for (int r = img.height() - 1; r >= 0; --r) {
    for (std::size_t k = 0; k < row_len; ++k) {
      std::uint32_t bits = std::bit_cast<std::uint32_t>(s[r * row_len + k]);
      if constexpr (std::endian::native == std::endian::big) {
        bits = __builtin_bswap32(bits);
      }
      char b[4];
      std::memcpy(b, &bits, 4);
      out.append(b, 4);
    }
  }
  return out;
}

Image decode_pfm(const std::string& bytes, ImageKind kind) {
  std::size_t pos = 0;
  const auto token = [&]() {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    return bytes.substr(start, pos - start);
  };
  const std::string magic = token();
  int channels;
  if (magic == "Pf") {
    channels = 1;
  } else if (magic == "PF") {
    channels = 3;
  } else {
    fail(ErrorCode::kParse, "not a PFM file (bad magic)");
  }
  int width = 0, height = 0;
  double scale = 0.0;
  try {
    width = std::stoi(token());
    height = std::stoi(token());
    scale = std::stod(token());
  } catch (const std::exception&) {
    fail(ErrorCode::kParse, "malformed PFM header");
  }
  if (width <= 0 || height <= 0 || scale == 0.0 || !std::isfinite(scale)) {
    fail(ErrorCode::kParse, "malformed PFM header values");
  }
  // Exactly one whitespace byte separates the header from the raster.
  ++pos;
  const std::size_t count = static_cast<std::size_t>(width) * height * channels;
  if (pos > bytes.size() || bytes.size() - pos < count * 4) {
    fail(ErrorCode::kParse, "truncated PFM raster");
  }
  const bool little = scale < 0.0;
  const bool swap = little != (std::endian::native == std::endian::little);
  std::vector<float> samples(count);
  const std::size_t row_len = static_cast<std::size_t>(width) * channels;
  for (int r = 0; r < height; ++r) {
    const int dst_row = height - 1 - r;
    for (std::size_t k = 0; k < row_len; ++k) {
      std::uint32_t bits;
      std::memcpy(&bits, bytes.data() + pos + (r * row_len + k) * 4, 4);
      if (swap) bits = __builtin_bswap32(bits);
      samples[dst_row * row_len + k] = std::bit_cast<float>(bits);
    }
  }
  return Image(width, height, channels, kind, std::move(samples));
}

Image read_pfm(const fs::path& path, ImageKind kind) {
  return decode_pfm(read_text(path), kind);
}

void write_pfm(const fs::path& path, const Image& img) {
  write_text(path, encode_pfm(img));
}

Image read_png(const fs::path& path) {
  if (!fs::exists(path)) fail(ErrorCode::kIo, "cannot open " + path.string());
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.string().c_str())) {
    fail(ErrorCode::kParse, "malformed PNG " + path.string() + ": " + png.message);
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, buf.data(), 0, nullptr)) {
    std::string msg = png.message;
    png_image_free(&png);
    fail(ErrorCode::kParse, "malformed PNG " + path.string() + ": " + msg);
  }
  const int channels = color ? 3 : 1;
  std::vector<float> samples(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) samples[i] = buf[i] / 255.0f;
  return Image(static_cast<int>(png.width), static_cast<int>(png.height), channels,
               ImageKind::kColor, std::move(samples));
}

namespace {

void write_png_bytes(const fs::path& path, int width, int height, int channels,
                     const std::vector<std::uint8_t>& buf) {
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(width);
  png.height = static_cast<png_uint_32>(height);
  png.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png, path.string().c_str(), 0, buf.data(), 0, nullptr)) {
    fail(ErrorCode::kIo, "cannot write PNG " + path.string() + ": " + png.message);
  }
}

}  // namespace

void write_png(const fs::path& path, const Image& img) {
  require(img.kind() != ImageKind::kDepth, ErrorCode::kDomain,
          "depth maps are stored as PFM, not PNG");
  std::vector<std::uint8_t> buf(img.samples().size());
  const auto s = img.samples();
  for (std::size_t i = 0; i < buf.size(); ++i) {
    const float v = std::clamp(s[i], 0.0f, 1.0f);
    buf[i] = static_cast<std::uint8_t>(std::lround(v * 255.0f));
  }
  write_png_bytes(path, img.width(), img.height(), img.channels(), buf);
}

void write_mask_png(const fs::path& path, const AttentionMask& mask) {
  require(mask.kind() == MaskKind::kBinary, ErrorCode::kDomain,
          "only binary masks export to PNG");
  std::vector<std::uint8_t> buf(mask.size());
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = mask[i] == 1.0f ? 255 : 0;
  write_png_bytes(path, mask.width(), mask.height(), 1, buf);
}

Image read_image(const fs::path& path, ImageKind pfm_kind) {
  const std::string ext = path.extension().string();
  if (ext == ".pfm" || ext == ".PFM") return read_pfm(path, pfm_kind);
  if (ext == ".png" || ext == ".PNG") return read_png(path);
  fail(ErrorCode::kUsage, "unsupported image extension: " + path.string());
}

AttentionMask read_mask(const fs::path& path) {
  Image img = read_image(path, ImageKind::kAttention);
  if (img.channels() != 1) fail(ErrorCode::kShape, "attention mask must be single-channel");
  return mask_from_image(img);
}

void write_mask(const fs::path& path, const AttentionMask& mask) {
  const std::string ext = path.extension().string();
  if (ext == ".png" || ext == ".PNG") {
    write_mask_png(path, mask);
  } else {
    write_pfm(path, mask_to_image(mask));
  }
}

nlohmann::json read_json(const fs::path& path) {
  const std::string text = read_text(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParse, "malformed JSON " + path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

nlohmann::json plan_to_json(const FoveaPlan& plan) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Fovea& f : plan.fovea) {
    arr.push_back({{"order", f.order},
                   {"peak", {f.peak.row, f.peak.col}},
                   {"origin", {f.origin.row, f.origin.col}},
                   {"window", {f.window.height, f.window.width}},
                   {"peak_value", f.peak_value}});
  }
  return arr;
}

FoveaPlan plan_from_json(const nlohmann::json& j) {
  FoveaPlan plan;
  try {
    require(j.is_array(), ErrorCode::kDomain, "plan JSON must be an array");
    for (const auto& e : j) {
      Fovea f;
      f.order = e.at("order").get<int>();
      f.peak = {e.at("peak").at(0).get<int>(), e.at("peak").at(1).get<int>()};
      f.origin = {e.at("origin").at(0).get<int>(), e.at("origin").at(1).get<int>()};
      f.window = {e.at("window").at(0).get<int>(), e.at("window").at(1).get<int>()};
      f.peak_value = e.at("peak_value").get<float>();
      plan.window = f.window;
      plan.fovea.push_back(f);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kDomain, std::string("malformed plan JSON: ") + e.what());
  }
  return plan;
}

nlohmann::json budget_to_json(const BandwidthBudget& b) {
  return {{"full_bw", b.full_bw},
          {"target_bw", b.target_bw},
          {"wac_bw", b.wac_bw},
          {"fovea_area_fraction", b.fovea_area_fraction},
          {"fovea_pixel_budget", b.fovea_pixel_budget},
          {"full_pixel_count", b.full_pixel_count}};
}

}  // namespace saccade::io
