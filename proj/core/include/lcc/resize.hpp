#pragma once

#include <utility>

#include "lcc/image.hpp"

namespace lcc {

/// Bilinear resample with pixel-centre alignment (no prefilter).
ImageRGB resize_bilinear(const ImageRGB& img, int width, int height);

/// Output size whose longer edge equals `long_edge`, aspect preserved
/// (shorter edge rounded, at least 1).
std::pair<int, int> long_edge_size(int width, int height, int long_edge);

ImageRGB resize_long_edge(const ImageRGB& img, int long_edge);

/// Each pixel replicated factor x factor times.
ImageRGB upsample_nearest(const ImageRGB& img, int factor);

}  // namespace lcc
