#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcc/model.hpp"

namespace lcc {

/// Binary checkpoint layout (little-endian):
///   "LCC1" | u32 knot count | u32 hidden size | f64 x parameter_count()
/// Parameters follow EnhancerParams::flatten() order.
std::vector<unsigned char> encode_params(const EnhancerParams& p);
EnhancerParams decode_params(const std::vector<unsigned char>& bytes);

void save_params(const std::filesystem::path& path, const EnhancerParams& p);
EnhancerParams load_params(const std::filesystem::path& path);

/// Inspection mirror of the checkpoint; `extra` is merged in at top level
/// (training writes its seed and config there).
nlohmann::json params_to_json(const EnhancerParams& p, const nlohmann::json& extra = {});
EnhancerParams params_from_json(const nlohmann::json& doc);

/// Writes `<path>` (binary) and `<path>.json` (mirror).
void save_checkpoint(const std::filesystem::path& path, const EnhancerParams& p,
                     const nlohmann::json& extra = {});

}  // namespace lcc
