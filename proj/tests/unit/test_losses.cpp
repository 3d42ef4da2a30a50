#include <gtest/gtest.h>

#include <cmath>

#include "lcc/color.hpp"
#include "lcc/losses.hpp"
#include "lcc/palette.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace lcc;
using lcc::testing::Rng;

TEST(Stage1Loss, ZeroWhenEqual) {
  Rng rng(1);
  const ImageRGB a = lcc::testing::random_image(4, 4, rng);
  EXPECT_EQ(stage1_loss(a, a), 0.0);
}

TEST(Stage1Loss, UniformLumaOffset) {
  Rng rng(2);
  const ImageRGB gt = lcc::testing::random_image(4, 4, rng, 0.2, 0.8);
  ImageRGB bright = gt;
  for (Rgb& p : bright.pixels()) p = {p.r + 0.05, p.g + 0.05, p.b + 0.05};
  EXPECT_NEAR(stage1_loss(bright, gt), 0.05, 1e-12);
}

TEST(Stage1Loss, MatchesScalarOracleAndGradient) {
  Rng rng(3);
  ImageRGB bright = lcc::testing::random_image(4, 4, rng);
  const ImageRGB gt = lcc::testing::random_image(4, 4, rng);
  double s = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    s += std::abs((0.299 * bright[i].r + 0.587 * bright[i].g + 0.114 * bright[i].b) -
                  (0.299 * gt[i].r + 0.587 * gt[i].g + 0.114 * gt[i].b));
  }
  EXPECT_NEAR(stage1_loss(bright, gt), s / 16, 1e-12);
  const GradientImage g = stage1_loss_grad(bright, gt);
  for (std::size_t i = 0; i < gt.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const double orig = channel(bright[i], c);
      channel(bright[i], c) = orig + 1e-7;
      const double plus = stage1_loss(bright, gt);
      channel(bright[i], c) = orig - 1e-7;
      const double minus = stage1_loss(bright, gt);
      channel(bright[i], c) = orig;
      ASSERT_NEAR(channel(g[i], c), (plus - minus) / 2e-7, 1e-6);
    }
  }
}

TEST(LabL1Loss, MatchesScalarOracle) {
  Rng rng(4);
  const ImageRGB out = lcc::testing::random_image(4, 4, rng);
  const ImageRGB gt = lcc::testing::random_image(4, 4, rng);
  double s = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const Lab a = lcc::testing::lab_oracle(out[i].r, out[i].g, out[i].b);
    const Lab b = lcc::testing::lab_oracle(gt[i].r, gt[i].g, gt[i].b);
    s += std::abs(a.l - b.l) + std::abs(a.a - b.a) + std::abs(a.b - b.b);
  }
  EXPECT_NEAR(lab_l1_loss(out, rgb_to_lab(gt)), s / 48, 1e-4);
  EXPECT_EQ(lab_l1_loss(gt, rgb_to_lab(gt)), 0.0);
}

TEST(LabL1Loss, GradientMatchesFiniteDifferences) {
  Rng rng(5);
  ImageRGB out = lcc::testing::random_image(4, 4, rng, 0.1, 0.9);
  const ImageLab gt = rgb_to_lab(lcc::testing::random_image(4, 4, rng, 0.1, 0.9));
  const GradientImage g = lab_l1_loss_grad(out, gt);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const double orig = channel(out[i], c);
      channel(out[i], c) = orig + 1e-7;
      const double plus = lab_l1_loss(out, gt);
      channel(out[i], c) = orig - 1e-7;
      const double minus = lab_l1_loss(out, gt);
      channel(out[i], c) = orig;
      const double fd = (plus - minus) / 2e-7;
      ASSERT_NEAR(channel(g[i], c), fd, 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(Stage2Loss, WeightedSum) {
  Rng rng(6);
  const ImageRGB out = lcc::testing::random_image(5, 5, rng);
  const ImageRGB gt = lcc::testing::random_image(5, 5, rng);
  const HuePaletteMask m = build_masks(gt, 10);
  const Stage2Loss l = stage2_loss(out, gt, m, 1.0, 1.0);
  EXPECT_NEAR(l.l1lab, lab_l1_loss(out, rgb_to_lab(gt)), 1e-12);
  EXPECT_NEAR(l.hue, lcc::testing::hue_loss_oracle(out, gt, 10), 1e-9);
  EXPECT_EQ(l.total, l.l1lab + l.hue);
  const Stage2Loss w = stage2_loss(out, gt, m, 0.5, 2.0);
  EXPECT_EQ(w.total, 0.5 * w.l1lab + 2.0 * w.hue);
  const Stage2Loss zero = stage2_loss(gt, gt, m);
  EXPECT_EQ(zero.total, 0.0);
}
