#pragma once

#include "lcc/image.hpp"

namespace lcc {

inline constexpr double kDefaultGainEpsilon = 1e-4;

/// Per-pixel luminance gains Y' / Y. All entries finite and >= 0.
class GainMap {
 public:
  GainMap() = default;
  explicit GainMap(Plane gain);

  int width() const { return gain_.width(); }
  int height() const { return gain_.height(); }
  std::size_t size() const { return gain_.size(); }
  double operator[](std::size_t i) const { return gain_[i]; }
  double at(int x, int y) const { return gain_.at(x, y); }
  const Plane& plane() const { return gain_; }

  friend bool operator==(const GainMap&, const GainMap&) = default;

 private:
  Plane gain_;
};

/// Gain for one pixel: target / source when source >= epsilon, otherwise 1.
/// Negative quotients are floored at 0.
double pixel_gain(double target, double source, double epsilon = kDefaultGainEpsilon);

/// Throws std::invalid_argument on shape mismatch or epsilon <= 0.
GainMap compute_gainmap(const Plane& y_target, const Plane& y_source,
                        double epsilon = kDefaultGainEpsilon);

enum class Clamp { kNo, kYes };

/// Multiplies all three channels of each pixel by that pixel's gain.
ImageRGB apply_gainmap(const ImageRGB& img, const GainMap& gain, Clamp clamp);

}  // namespace lcc
