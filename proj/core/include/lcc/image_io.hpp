#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "lcc/image.hpp"

namespace lcc {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BitDepth { k8 = 8, k16 = 16 };

/// Reads PNG (8/16-bit, gray/RGB, alpha dropped) or binary PPM/PGM (P6/P5).
/// Samples are mapped to [0, 1] by v / 255 or v / 65535.
ImageRGB read_image(const std::filesystem::path& path);

/// Writes PNG or PPM by extension. Values are clamped, then rounded half-up.
void write_image(const std::filesystem::path& path, const ImageRGB& img,
                 BitDepth depth = BitDepth::k8);

/// Binary PGM (P5) of a plane already scaled to [0, 1].
void write_pgm(const std::filesystem::path& path, const Plane& plane,
               BitDepth depth = BitDepth::k16);
Plane read_pgm(const std::filesystem::path& path);

/// True for the image extensions read_image understands.
bool is_image_file(const std::filesystem::path& path);

/// clamp to [0, 1], then floor(v * max + 0.5).
unsigned quantize(double v, unsigned max_value);

}  // namespace lcc
