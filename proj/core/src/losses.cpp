#include "lcc/losses.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lcc/color.hpp"

namespace lcc {

namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

template <class A, class B>
void require_same(const A& a, const B& b, const char* what) {
  if (!a.same_shape(b) || a.empty()) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

double stage1_loss(const ImageRGB& bright, const ImageRGB& gt) {
  require_same(bright, gt, "stage1_loss");
  double sum = 0.0;
  for (std::size_t i = 0; i < bright.size(); ++i) sum += std::abs(luma(bright[i]) - luma(gt[i]));
  return sum / static_cast<double>(bright.size());
}

GradientImage stage1_loss_grad(const ImageRGB& bright, const ImageRGB& gt) {
  require_same(bright, gt, "stage1_loss_grad");
  GradientImage grad(bright.width(), bright.height());
  const double inv_n = 1.0 / static_cast<double>(bright.size());
  for (std::size_t i = 0; i < bright.size(); ++i) {
    const double s = sign(luma(bright[i]) - luma(gt[i])) * inv_n;
    grad[i] = {s * kLumaWeights[0], s * kLumaWeights[1], s * kLumaWeights[2]};
  }
  return grad;
}

double lab_l1_loss(const ImageRGB& output, const ImageLab& gt_lab) {
  require_same(output, gt_lab, "lab_l1_loss");
  double sum = 0.0;
  for (std::size_t i = 0; i < output.size(); ++i) {
    const Lab o = rgb_to_lab(output[i]);
    const Lab& g = gt_lab[i];
    sum += std::abs(o.l - g.l) + std::abs(o.a - g.a) + std::abs(o.b - g.b);
  }
  return sum / (3.0 * static_cast<double>(output.size()));
}

GradientImage lab_l1_loss_grad(const ImageRGB& output, const ImageLab& gt_lab) {
  require_same(output, gt_lab, "lab_l1_loss_grad");
  GradientImage grad(output.width(), output.height());
  const double scale = 1.0 / (3.0 * static_cast<double>(output.size()));
  for (std::size_t i = 0; i < output.size(); ++i) {
    const Lab o = rgb_to_lab(output[i]);
    const Lab& g = gt_lab[i];
    const double s[3] = {sign(o.l - g.l) * scale, sign(o.a - g.a) * scale, sign(o.b - g.b) * scale};
    const Matrix3 j = rgb_to_lab_jacobian(output[i]);
    grad[i] = {s[0] * j[0][0] + s[1] * j[1][0] + s[2] * j[2][0],
               s[0] * j[0][1] + s[1] * j[1][1] + s[2] * j[2][1],
               s[0] * j[0][2] + s[1] * j[1][2] + s[2] * j[2][2]};
  }
  return grad;
}

Stage2Loss stage2_loss(const ImageRGB& output, const ImageRGB& gt, const HuePaletteMask& masks,
                       double w_l1lab, double w_hue) {
  Stage2Loss loss;
  loss.l1lab = lab_l1_loss(output, rgb_to_lab(gt));
  loss.hue = hue_palette_loss(output, gt, masks);
  loss.total = w_l1lab * loss.l1lab + w_hue * loss.hue;
  return loss;
}

}  // namespace lcc
