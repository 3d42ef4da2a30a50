#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcc/kmeans.hpp"

namespace lcc {

class ExifParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The six shooting-condition scalars. Fields absent from the source are 0.
struct ExifVector {
  double iso = 0.0;            // ISO speed rating
  double exposure_time = 0.0;  // seconds
  double fnumber = 0.0;        // f-stop
  double shutter_speed = 0.0;  // APEX Tv
  double focal_length = 0.0;   // millimetres
  double bias_value = 0.0;     // EV
  friend bool operator==(const ExifVector&, const ExifVector&) = default;
};

inline constexpr std::size_t kConditionSize = 6;

/// Condition vector in model order [iso, exposure, fnumber, speed, flength, bias].
struct NormalizedCondition {
  std::array<double, kConditionSize> values{};
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  friend bool operator==(const NormalizedCondition&, const NormalizedCondition&) = default;
};

/// [iso / 1000, exposure_time * 1000, fnumber, shutter_speed, focal_length / 10, bias].
NormalizedCondition normalize(const ExifVector& v);

/// Parses a JSON sidecar object with optional keys iso, exposure_time, fnumber,
/// shutter_speed, focal_length, bias_value. Missing or null keys read as 0.
ExifVector parse_exif_json(std::string_view text);

/// Reads the six tags from a JPEG's APP1 Exif segment (either byte order).
/// A JPEG without an Exif segment yields all zeros.
ExifVector parse_exif_jpeg(std::span<const std::uint8_t> bytes);

/// Dispatches on extension: .json sidecar or .jpg/.jpeg.
ExifVector load_exif(const std::filesystem::path& path);

/// `<dir>/<stem>.exif.json` for an image path.
std::filesystem::path sidecar_path(const std::filesystem::path& image);

struct ConditionClusters {
  std::vector<int> assignments;
  std::vector<NormalizedCondition> centroids;
  KMeansResult raw;
};

/// k-means (k-means++ seeding, Lloyd iterations) over condition vectors.
ConditionClusters kmeans_cluster(std::span<const NormalizedCondition> vectors, std::size_t k,
                                 std::uint64_t seed, const KMeansOptions& options = {});

}  // namespace lcc
