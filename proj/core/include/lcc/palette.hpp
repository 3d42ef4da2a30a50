#pragma once

#include <cstdint>
#include <vector>

#include "lcc/image.hpp"
#include "lcc/kmeans.hpp"

namespace lcc {

inline constexpr int kDefaultHueBins = 10;

/// Coordinate masks over hue bins. Every pixel belongs to exactly one bin,
/// so the masks partition the image. Stored as a per-pixel bin index;
/// mask(j) expands bin j to a binary plane.
class HuePaletteMask {
 public:
  HuePaletteMask(int width, int height, int bins, std::vector<std::uint16_t> bin_of);

  int width() const { return width_; }
  int height() const { return height_; }
  int bins() const { return bins_; }
  double bin_width() const { return 360.0 / bins_; }

  int bin_of(std::size_t pixel) const { return bin_of_[pixel]; }
  bool contains(int bin, int x, int y) const {
    return bin_of_[static_cast<std::size_t>(y) * width_ + x] == bin;
  }
  /// Number of pixels in bin j.
  std::size_t count(int bin) const { return counts_[bin]; }
  const std::vector<std::size_t>& counts() const { return counts_; }

  /// Binary H x W plane CM_j.
  Plane mask(int bin) const;

 private:
  int width_ = 0;
  int height_ = 0;
  int bins_ = 0;
  std::vector<std::uint16_t> bin_of_;
  std::vector<std::size_t> counts_;
};

/// Bin index of a hue in degrees; edges are half-open and 360 wraps to 0.
int hue_bin(double hue_degrees, int bins);

/// Throws std::invalid_argument unless bins >= 1 and bins divides 360.
void check_hue_bins(int bins);
/// Masks from the hue of `reference`. bins must be >= 1 and divide 360.
HuePaletteMask build_masks(const ImageRGB& reference, int bins = kDefaultHueBins);

struct HueLossTerms {
  std::vector<double> per_bin;
  double total = 0.0;
};

/// Per-bin L1 over the masked pixels (all three channels), each divided by
/// the bin's pixel count; empty bins contribute 0.
HueLossTerms hue_palette_loss_terms(const ImageRGB& output, const ImageRGB& gt,
                                    const HuePaletteMask& masks);
double hue_palette_loss(const ImageRGB& output, const ImageRGB& gt, const HuePaletteMask& masks);

/// d loss / d output with masks held constant: sign(output - gt) / count.
GradientImage hue_palette_loss_grad(const ImageRGB& output, const ImageRGB& gt,
                                    const HuePaletteMask& masks);

struct PaletteColor {
  Lab lab;
  double weight = 0.0;  // fraction of pixels
};

struct PaletteColors {
  std::vector<PaletteColor> colors;  // descending by weight
  double inertia = 0.0;              // in Lab units squared
};

inline constexpr int kDefaultPaletteSize = 6;

/// k-means over the image's Lab pixels; centroids sorted by cluster size.
PaletteColors major_colors(const ImageRGB& img, int k = kDefaultPaletteSize,
                           std::uint64_t seed = 6);

}  // namespace lcc
