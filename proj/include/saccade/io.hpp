#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "saccade/attention.hpp"
#include "saccade/bandwidth.hpp"
#include "saccade/image.hpp"
#include "saccade/planner.hpp"

namespace saccade::io {

// Portable float map. "Pf" is single channel, "PF" three channel. Rows are
// stored bottom-to-top; a negative scale marks little-endian samples. The
// writer always emits little-endian with scale -1.
Image read_pfm(const std::filesystem::path& path, ImageKind kind = ImageKind::kDepth);
void write_pfm(const std::filesystem::path& path, const Image& img);
std::string encode_pfm(const Image& img);
Image decode_pfm(const std::string& bytes, ImageKind kind = ImageKind::kDepth);

// 8-bit PNG, gray or RGB. Samples map linearly between [0,255] and [0,1].
Image read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& img);

// Binary mask as 0/255 grayscale PNG.
void write_mask_png(const std::filesystem::path& path, const AttentionMask& mask);

// Dispatches on extension: .pfm or .png.
Image read_image(const std::filesystem::path& path, ImageKind pfm_kind = ImageKind::kDepth);

AttentionMask read_mask(const std::filesystem::path& path);
void write_mask(const std::filesystem::path& path, const AttentionMask& mask);

nlohmann::json read_json(const std::filesystem::path& path);
// Pretty-printed, keys sorted, trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// [{order, peak:[r,c], origin:[r,c], window:[h,w], peak_value}, ...]
nlohmann::json plan_to_json(const FoveaPlan& plan);
FoveaPlan plan_from_json(const nlohmann::json& j);

nlohmann::json budget_to_json(const BandwidthBudget& b);

}  // namespace saccade::io
