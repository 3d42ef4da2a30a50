#pragma once

#include "lcc/image.hpp"

namespace lcc {

/// Largest per-channel absolute difference.
double max_abs_difference(const ImageRGB& a, const ImageRGB& b);
double mse(const ImageRGB& a, const ImageRGB& b);

/// 10 log10(1 / MSE) over all pixels and channels; +infinity when identical.
double psnr(const ImageRGB& a, const ImageRGB& b);

struct SsimOptions {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;
};

/// Mean SSIM on luma over all fully-contained Gaussian windows. Images
/// smaller than the window use a window clipped to the image size.
double ssim(const ImageRGB& a, const ImageRGB& b, const SsimOptions& options = {});

}  // namespace lcc
