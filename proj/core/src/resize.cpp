#include "lcc/resize.hpp"

#include <cmath>
#include <stdexcept>

namespace lcc {

ImageRGB resize_bilinear(const ImageRGB& img, int width, int height) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("resize: target size must be positive");
  if (img.empty()) throw std::invalid_argument("resize: empty source image");
  if (img.same_shape(width, height)) return img;

  const double sx = static_cast<double>(img.width()) / width;
  const double sy = static_cast<double>(img.height()) / height;
  ImageRGB out(width, height);
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, img.height() - 1.0);
    const int y0 = static_cast<int>(std::floor(fy));
    const int y1 = std::min(y0 + 1, img.height() - 1);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, img.width() - 1.0);
      const int x0 = static_cast<int>(std::floor(fx));
      const int x1 = std::min(x0 + 1, img.width() - 1);
      const double wx = fx - x0;
      const Rgb& a = img.at(x0, y0);
      const Rgb& b = img.at(x1, y0);
      const Rgb& c = img.at(x0, y1);
      const Rgb& d = img.at(x1, y1);
      auto mix = [&](double pa, double pb, double pc, double pd) {
        const double top = pa + (pb - pa) * wx;
        const double bottom = pc + (pd - pc) * wx;
        return top + (bottom - top) * wy;
      };
      out.at(x, y) = {mix(a.r, b.r, c.r, d.r), mix(a.g, b.g, c.g, d.g), mix(a.b, b.b, c.b, d.b)};
    }
  }
  return out;
}

std::pair<int, int> long_edge_size(int width, int height, int long_edge) {
  if (width <= 0 || height <= 0 || long_edge <= 0)
    throw std::invalid_argument("long_edge_size: sizes must be positive");
  if (width >= height) {
    const int h = std::max(1, static_cast<int>(std::lround(static_cast<double>(height) * long_edge / width)));
    return {long_edge, h};
  }
  const int w = std::max(1, static_cast<int>(std::lround(static_cast<double>(width) * long_edge / height)));
  return {w, long_edge};
}

ImageRGB resize_long_edge(const ImageRGB& img, int long_edge) {
  const auto [w, h] = long_edge_size(img.width(), img.height(), long_edge);
  return resize_bilinear(img, w, h);
}

ImageRGB upsample_nearest(const ImageRGB& img, int factor) {
  if (factor < 1) throw std::invalid_argument("upsample: factor must be >= 1");
  ImageRGB out(img.width() * factor, img.height() * factor);
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x) out.at(x, y) = img.at(x / factor, y / factor);
  return out;
}

}  // namespace lcc
