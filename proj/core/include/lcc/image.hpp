#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcc {

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Yuv {
  double y = 0.0;
  double u = 0.0;
  double v = 0.0;
  friend bool operator==(const Yuv&, const Yuv&) = default;
};

/// CIE Lab, D65 reference white. L in [0, 100].
struct Lab {
  double l = 0.0;
  double a = 0.0;
  double b = 0.0;
  friend bool operator==(const Lab&, const Lab&) = default;
};

/// Hexcone HSV. Hue in degrees [0, 360); achromatic pixels get h = 0.
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
  friend bool operator==(const Hsv&, const Hsv&) = default;
};

inline double& channel(Rgb& p, int c) { return c == 0 ? p.r : (c == 1 ? p.g : p.b); }
inline double channel(const Rgb& p, int c) { return c == 0 ? p.r : (c == 1 ? p.g : p.b); }

/// Row-major H x W grid of three-channel pixels. The pixel structs are three
/// packed doubles, so the storage is the flat H x W x 3 layout.
template <class Pixel>
class Image {
 public:
  Image() = default;
  Image(int width, int height, Pixel fill = {})
      : width_(check_dim(width)), height_(check_dim(height)),
        pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}
  Image(int width, int height, std::vector<Pixel> pixels)
      : width_(check_dim(width)), height_(check_dim(height)), pixels_(std::move(pixels)) {
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw std::invalid_argument("image: pixel count does not match " +
                                  std::to_string(width) + "x" + std::to_string(height));
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }

  Pixel& at(int x, int y) { return pixels_[index(x, y)]; }
  const Pixel& at(int x, int y) const { return pixels_[index(x, y)]; }
  Pixel& operator[](std::size_t i) { return pixels_[i]; }
  const Pixel& operator[](std::size_t i) const { return pixels_[i]; }

  std::span<Pixel> pixels() { return pixels_; }
  std::span<const Pixel> pixels() const { return pixels_; }

  bool same_shape(int w, int h) const { return w == width_ && h == height_; }
  template <class Other>
  bool same_shape(const Other& o) const {
    return o.width() == width_ && o.height() == height_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  static int check_dim(int d) {
    if (d < 0) throw std::invalid_argument("image: negative dimension");
    return d;
  }
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Pixel> pixels_;
};

using ImageRGB = Image<Rgb>;
using ImageYUV = Image<Yuv>;
using ImageLab = Image<Lab>;
using ImageHSV = Image<Hsv>;

/// Per-pixel gradient of a scalar with respect to an RGB image.
using GradientImage = Image<Rgb>;

/// Single-channel H x W plane (luma, gains, masks).
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, double fill = 0.0)
      : width_(width), height_(height),
        values_(static_cast<std::size_t>(std::max(width, 0)) *
                    static_cast<std::size_t>(std::max(height, 0)),
                fill) {
    if (width < 0 || height < 0) throw std::invalid_argument("plane: negative dimension");
  }
  Plane(int width, int height, std::vector<double> values)
      : width_(width), height_(height), values_(std::move(values)) {
    if (width < 0 || height < 0 ||
        values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw std::invalid_argument("plane: value count does not match shape");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }

  double& at(int x, int y) { return values_[static_cast<std::size_t>(y) * width_ + x]; }
  double at(int x, int y) const { return values_[static_cast<std::size_t>(y) * width_ + x]; }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  template <class Other>
  bool same_shape(const Other& o) const {
    return o.width() == width_ && o.height() == height_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

/// Clamps every channel to [0, 1].
ImageRGB clamped(const ImageRGB& img);

}  // namespace lcc
