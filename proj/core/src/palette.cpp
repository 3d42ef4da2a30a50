#include "lcc/palette.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lcc/color.hpp"

namespace lcc {

HuePaletteMask::HuePaletteMask(int width, int height, int bins, std::vector<std::uint16_t> bin_of)
    : width_(width), height_(height), bins_(bins), bin_of_(std::move(bin_of)), counts_(bins, 0) {
  if (bin_of_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("HuePaletteMask: label count does not match shape");
  for (std::uint16_t b : bin_of_) {
    if (b >= bins_) throw std::invalid_argument("HuePaletteMask: bin index out of range");
    ++counts_[b];
  }
}

Plane HuePaletteMask::mask(int bin) const {
  Plane out(width_, height_);
  for (std::size_t i = 0; i < bin_of_.size(); ++i) out[i] = bin_of_[i] == bin ? 1.0 : 0.0;
  return out;
}

int hue_bin(double hue_degrees, int bins) {
  const double width = 360.0 / bins;
  int bin = static_cast<int>(std::floor(hue_degrees / width));
  if (bin >= bins || bin < 0) bin = ((bin % bins) + bins) % bins;
  return bin;
}

void check_hue_bins(int bins) {
  if (bins < 1 || 360 % bins != 0)
    throw std::invalid_argument("hue bin count " + std::to_string(bins) + " must be >= 1 and divide 360");
}

HuePaletteMask build_masks(const ImageRGB& reference, int bins) {
  check_hue_bins(bins);
  std::vector<std::uint16_t> labels(reference.size());
  for (std::size_t i = 0; i < reference.size(); ++i)
    labels[i] = static_cast<std::uint16_t>(hue_bin(hue_degrees(reference[i]), bins));
  return HuePaletteMask(reference.width(), reference.height(), bins, std::move(labels));
}

namespace {

void check_shapes(const ImageRGB& output, const ImageRGB& gt, const HuePaletteMask& masks) {
  if (!output.same_shape(gt) || !output.same_shape(masks))
    throw std::invalid_argument("hue palette loss: output, gt and masks must share a shape");
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

HueLossTerms hue_palette_loss_terms(const ImageRGB& output, const ImageRGB& gt,
                                    const HuePaletteMask& masks) {
  check_shapes(output, gt, masks);
  HueLossTerms terms;
  terms.per_bin.assign(masks.bins(), 0.0);
  for (std::size_t i = 0; i < output.size(); ++i) {
    const Rgb& o = output[i];
    const Rgb& g = gt[i];
    terms.per_bin[masks.bin_of(i)] +=
        std::abs(o.r - g.r) + std::abs(o.g - g.g) + std::abs(o.b - g.b);
  }
  for (int j = 0; j < masks.bins(); ++j) {
    if (masks.count(j) == 0) continue;
    terms.per_bin[j] /= static_cast<double>(masks.count(j));
    terms.total += terms.per_bin[j];
  }
  return terms;
}

double hue_palette_loss(const ImageRGB& output, const ImageRGB& gt, const HuePaletteMask& masks) {
  return hue_palette_loss_terms(output, gt, masks).total;
}

GradientImage hue_palette_loss_grad(const ImageRGB& output, const ImageRGB& gt,
                                    const HuePaletteMask& masks) {
  check_shapes(output, gt, masks);
  GradientImage grad(output.width(), output.height());
  for (std::size_t i = 0; i < output.size(); ++i) {
    const double inv = 1.0 / static_cast<double>(masks.count(masks.bin_of(i)));
    const Rgb& o = output[i];
    const Rgb& g = gt[i];
    grad[i] = {sign(o.r - g.r) * inv, sign(o.g - g.g) * inv, sign(o.b - g.b) * inv};
  }
  return grad;
}

PaletteColors major_colors(const ImageRGB& img, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("major_colors: k must be >= 1");
  if (static_cast<std::size_t>(k) > img.size())
    throw std::invalid_argument("major_colors: k exceeds pixel count");
  std::vector<double> points;
  points.reserve(img.size() * 3);
  for (const Rgb& p : img.pixels()) {
    const Lab lab = rgb_to_lab(p);
    points.insert(points.end(), {lab.l, lab.a, lab.b});
  }
  const KMeansResult km = kmeans(points, 3, static_cast<std::size_t>(k), seed);

  std::vector<std::size_t> sizes(k, 0);
  for (int a : km.assignments) ++sizes[a];
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });

  PaletteColors out;
  out.inertia = km.inertia;
  const double n = static_cast<double>(img.size());
  for (int j : order) {
    const auto c = km.centroid(j);
    out.colors.push_back({Lab{c[0], c[1], c[2]}, static_cast<double>(sizes[j]) / n});
  }
  return out;
}

}  // namespace lcc
