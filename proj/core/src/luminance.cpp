#include "lcc/luminance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcc {

GainMap::GainMap(Plane gain) : gain_(std::move(gain)) {
  for (double g : gain_.values()) {
    if (!std::isfinite(g) || g < 0.0) throw std::invalid_argument("gainmap: gains must be finite and >= 0");
  }
}

double pixel_gain(double target, double source, double epsilon) {
  if (source < epsilon) return 1.0;
  return std::max(target / source, 0.0);
}

GainMap compute_gainmap(const Plane& y_target, const Plane& y_source, double epsilon) {
  if (!y_target.same_shape(y_source)) throw std::invalid_argument("compute_gainmap: shape mismatch");
  if (!(epsilon > 0.0)) throw std::invalid_argument("compute_gainmap: epsilon must be > 0");
  Plane gain(y_source.width(), y_source.height());
  for (std::size_t i = 0; i < gain.size(); ++i) gain[i] = pixel_gain(y_target[i], y_source[i], epsilon);
  return GainMap(std::move(gain));
}

ImageRGB apply_gainmap(const ImageRGB& img, const GainMap& gain, Clamp clamp) {
  if (!img.same_shape(gain)) throw std::invalid_argument("apply_gainmap: shape mismatch");
  ImageRGB out(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double g = gain[i];
    Rgb p{img[i].r * g, img[i].g * g, img[i].b * g};
    if (clamp == Clamp::kYes) {
      p = {std::clamp(p.r, 0.0, 1.0), std::clamp(p.g, 0.0, 1.0), std::clamp(p.b, 0.0, 1.0)};
    }
    out[i] = p;
  }
  return out;
}

}  // namespace lcc
