#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcc/dataset.hpp"
#include "lcc/exif.hpp"
#include "lcc/image.hpp"
#include "lcc/model.hpp"

namespace lcc::testing {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);

ImageRGB random_image(int width, int height, Rng& rng, double lo = 0.0, double hi = 1.0);
NormalizedCondition random_condition(Rng& rng);

/// Identity parameters with every entry perturbed; branch outputs stay small
/// so curves remain near the diagonal.
EnhancerParams random_params(Rng& rng, int knots = kDefaultKnots, int hidden = kDefaultHidden);

/// Hidden global tone curve plus per-channel colour curves, all piecewise
/// linear on the default knot grid. Condition branches are zero.
EnhancerParams teacher_params();

/// Dark random inputs pushed through teacher_params().
std::vector<SamplePair> curve_dataset(int count, int width, int height, std::uint64_t seed);

struct Rect {
  int x0, y0, x1, y1;  // half-open
  bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }
};

struct SpotSet {
  std::vector<SamplePair> pairs;
  std::vector<Rect> spots;  // one per pair
};

/// Warm near-gray background that GT leaves unchanged and a small blue spot,
/// placed at random, that GT saturates.
SpotSet saturated_spot_dataset(int count, int size, std::uint64_t seed);
double mean_saturation(const ImageRGB& img, const Rect& region);

/// Three isotropic Gaussian blobs in six dimensions; `labels` receives the
/// planted blob of each point.
std::vector<NormalizedCondition> gaussian_blobs(int per_blob, double sigma, double separation,
                                                std::uint64_t seed, std::vector<int>& labels);

struct ExifTag {
  std::uint16_t tag;
  std::uint16_t type;   // 3 SHORT, 4 LONG, 5 RATIONAL, 10 SRATIONAL
  std::uint32_t num;    // value, or numerator for rationals
  std::uint32_t den = 1;
};

/// Minimal JPEG: SOI, APP1 Exif with IFD0 -> ExifIFD holding `tags`, EOI.
std::vector<std::uint8_t> exif_jpeg(const std::vector<ExifTag>& tags, bool big_endian);

}  // namespace lcc::testing
