#include "lcc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lcc/color.hpp"

namespace lcc {

namespace {

void check_same(const ImageRGB& a, const ImageRGB& b) {
  if (!a.same_shape(b) || a.empty()) throw std::invalid_argument("metric: images must be non-empty and the same size");
}

std::vector<double> gaussian_kernel(int size, double sigma) {
  std::vector<double> k(size);
  const double centre = (size - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - centre;
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

// Separable 'valid' filtering: output is (w - kw + 1) x (h - kh + 1).
Plane filter_valid(const Plane& in, const std::vector<double>& kx, const std::vector<double>& ky) {
  const int kw = static_cast<int>(kx.size());
  const int kh = static_cast<int>(ky.size());
  const int ow = in.width() - kw + 1;
  const int oh = in.height() - kh + 1;
  Plane rows(ow, in.height());
  for (int y = 0; y < in.height(); ++y)
    for (int x = 0; x < ow; ++x) {
      double s = 0.0;
      for (int i = 0; i < kw; ++i) s += kx[i] * in.at(x + i, y);
      rows.at(x, y) = s;
    }
  Plane out(ow, oh);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      double s = 0.0;
      for (int j = 0; j < kh; ++j) s += ky[j] * rows.at(x, y + j);
      out.at(x, y) = s;
    }
  return out;
}

Plane product(const Plane& a, const Plane& b) {
  Plane out(a.width(), a.height());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

double mse(const ImageRGB& a, const ImageRGB& b) {
  check_same(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dr = a[i].r - b[i].r;
    const double dg = a[i].g - b[i].g;
    const double db = a[i].b - b[i].b;
    sum += dr * dr + dg * dg + db * db;
  }
  return sum / (3.0 * static_cast<double>(a.size()));
}

double max_abs_difference(const ImageRGB& a, const ImageRGB& b) {
  check_same(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int c = 0; c < 3; ++c) m = std::max(m, std::abs(channel(a[i], c) - channel(b[i], c)));
  return m;
}

double psnr(const ImageRGB& a, const ImageRGB& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / m);
}

double ssim(const ImageRGB& a, const ImageRGB& b, const SsimOptions& o) {
  check_same(a, b);
  const Plane x = luma(a);
  const Plane y = luma(b);
  const auto kx = gaussian_kernel(std::min(o.window, x.width()), o.sigma);
  const auto ky = gaussian_kernel(std::min(o.window, x.height()), o.sigma);
  const double c1 = (o.k1 * o.dynamic_range) * (o.k1 * o.dynamic_range);
  const double c2 = (o.k2 * o.dynamic_range) * (o.k2 * o.dynamic_range);

  const Plane mu_x = filter_valid(x, kx, ky);
  const Plane mu_y = filter_valid(y, kx, ky);
  const Plane xx = filter_valid(product(x, x), kx, ky);
  const Plane yy = filter_valid(product(y, y), kx, ky);
  const Plane xy = filter_valid(product(x, y), kx, ky);

  double total = 0.0;
  for (std::size_t i = 0; i < mu_x.size(); ++i) {
    const double mx = mu_x[i];
    const double my = mu_y[i];
    const double sxx = xx[i] - mx * mx;
    const double syy = yy[i] - my * my;
    const double sxy = xy[i] - mx * my;
    total += ((2.0 * mx * my + c1) * (2.0 * sxy + c2)) /
             ((mx * mx + my * my + c1) * (sxx + syy + c2));
  }
  return total / static_cast<double>(mu_x.size());
}

}  // namespace lcc
