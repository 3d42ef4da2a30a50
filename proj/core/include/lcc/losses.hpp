#pragma once

#include "lcc/image.hpp"
#include "lcc/palette.hpp"

namespace lcc {

/// Mean absolute luma difference.
double stage1_loss(const ImageRGB& bright, const ImageRGB& gt);
GradientImage stage1_loss_grad(const ImageRGB& bright, const ImageRGB& gt);

/// Mean over pixels and the three Lab channels of |Lab(output) - Lab(gt)|.
double lab_l1_loss(const ImageRGB& output, const ImageLab& gt_lab);
GradientImage lab_l1_loss_grad(const ImageRGB& output, const ImageLab& gt_lab);

struct Stage2Loss {
  double l1lab = 0.0;
  double hue = 0.0;
  double total = 0.0;  // w_l1lab * l1lab + w_hue * hue
};

Stage2Loss stage2_loss(const ImageRGB& output, const ImageRGB& gt, const HuePaletteMask& masks,
                       double w_l1lab = 1.0, double w_hue = 1.0);

}  // namespace lcc
