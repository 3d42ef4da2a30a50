#include <gtest/gtest.h>

#include <cmath>

#include "lcc/color.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace lcc;
using lcc::testing::Rng;
using lcc::testing::uniform;

namespace {

Rgb random_rgb(Rng& rng) { return {uniform(rng), uniform(rng), uniform(rng)}; }

double max_diff(const Rgb& a, const Rgb& b) {
  return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

}  // namespace

TEST(Yuv, BlackMapsToZero) {
  EXPECT_EQ(rgb_to_yuv(Rgb{0, 0, 0}), (Yuv{0, 0, 0}));
}

TEST(Yuv, RedIsFirstMatrixColumn) {
  EXPECT_EQ(rgb_to_yuv(Rgb{1, 0, 0}), (Yuv{0.299, -0.169, 0.5}));
}

TEST(Yuv, WhiteIsExactlyUnitLuma) {
  EXPECT_EQ(rgb_to_yuv(Rgb{1, 1, 1}), (Yuv{1.0, 0.0, 0.0}));
}

TEST(Yuv, InverseExamples) {
  EXPECT_EQ(yuv_to_rgb(Yuv{0, 0, 0}), (Rgb{0, 0, 0}));
  const Rgb white = yuv_to_rgb(Yuv{1, 0, 0});
  EXPECT_NEAR(white.r, 1.0, 1e-12);
  EXPECT_NEAR(white.g, 1.0, 1e-12);
  EXPECT_NEAR(white.b, 1.0, 1e-12);
}

TEST(Yuv, InverseMatrixTimesForwardIsIdentity) {
  const Matrix3 a = yuv_matrix();
  const Matrix3 inv = yuv_inverse_matrix();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += inv[i][k] * a[k][j];
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-12) << i << "," << j;
    }
  }
}

TEST(Yuv, MatrixHasPrintedCoefficients) {
  const Matrix3 expected = {{{0.299, 0.587, 0.114}, {-0.169, -0.331, 0.5}, {0.5, -0.419, -0.081}}};
  EXPECT_EQ(yuv_matrix(), expected);
}

TEST(Yuv, RandomRoundTripBelowTolerance) {
  Rng rng(1);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Rgb p = random_rgb(rng);
    worst = std::max(worst, max_diff(p, yuv_to_rgb(rgb_to_yuv(p))));
  }
  EXPECT_LT(worst, 1e-4);
  EXPECT_LT(worst, 1e-12);
}

TEST(Yuv, Linearity) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const Rgb a = random_rgb(rng), b = random_rgb(rng);
    const double alpha = uniform(rng, -2, 2), beta = uniform(rng, -2, 2);
    const Yuv lhs = rgb_to_yuv(Rgb{alpha * a.r + beta * b.r, alpha * a.g + beta * b.g, alpha * a.b + beta * b.b});
    const Yuv ya = rgb_to_yuv(a), yb = rgb_to_yuv(b);
    EXPECT_NEAR(lhs.y, alpha * ya.y + beta * yb.y, 1e-10);
    EXPECT_NEAR(lhs.u, alpha * ya.u + beta * yb.u, 1e-10);
    EXPECT_NEAR(lhs.v, alpha * ya.v + beta * yb.v, 1e-10);
  }
}

TEST(Yuv, GrayAxis) {
  for (int i = 0; i <= 1000; ++i) {
    const double g = i / 1000.0;
    const Yuv p = rgb_to_yuv(Rgb{g, g, g});
    EXPECT_NEAR(p.y, g, 1e-6);
    EXPECT_NEAR(p.u, 0.0, 1e-6);
    EXPECT_NEAR(p.v, 0.0, 1e-6);
  }
}

TEST(Yuv, ChannelRanges) {
  Rng rng(3);
  for (int i = 0; i < 100000; ++i) {
    const Yuv p = rgb_to_yuv(random_rgb(rng));
    ASSERT_GE(p.y, 0.0);
    ASSERT_LE(p.y, 1.0);
    ASSERT_GE(p.u, -0.5);
    ASSERT_LE(p.u, 0.5);
    ASSERT_GE(p.v, -0.5);
    ASSERT_LE(p.v, 0.5);
  }
}

TEST(Yuv, InverseClamps) {
  const Rgb p = yuv_to_rgb(Yuv{1.0, 0.5, 0.5});
  for (double c : {p.r, p.g, p.b}) {
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
}

TEST(Yuv, ImageMatchesPixels) {
  Rng rng(4);
  const ImageRGB img = lcc::testing::random_image(5, 3, rng);
  const ImageYUV yuv = rgb_to_yuv(img);
  const Plane y = luma(img);
  for (std::size_t i = 0; i < img.size(); ++i) {
    EXPECT_EQ(yuv[i], rgb_to_yuv(img[i]));
    EXPECT_EQ(y[i], yuv[i].y);
  }
}

TEST(Hsv, PrimaryExamples) {
  EXPECT_EQ(rgb_to_hsv(Rgb{1, 0, 0}), (Hsv{0, 1, 1}));
  EXPECT_EQ(rgb_to_hsv(Rgb{0, 1, 0}), (Hsv{120, 1, 1}));
  EXPECT_EQ(rgb_to_hsv(Rgb{0.5, 0.5, 0.5}), (Hsv{0, 0, 0.5}));
  EXPECT_EQ(rgb_to_hsv(Rgb{0, 0, 1}).h, 240.0);
}

TEST(Hsv, AchromaticHasZeroHueAndSaturation) {
  for (double g : {0.0, 0.25, 1.0}) {
    const Hsv h = rgb_to_hsv(Rgb{g, g, g});
    EXPECT_EQ(h.h, 0.0);
    EXPECT_EQ(h.s, 0.0);
  }
}

TEST(Hsv, RoundTripAwayFromGrayAxis) {
  Rng rng(5);
  int checked = 0;
  while (checked < 10000) {
    const Rgb p = random_rgb(rng);
    const Hsv h = rgb_to_hsv(p);
    if (h.s <= 0.01) continue;
    ++checked;
    ASSERT_LT(max_diff(p, hsv_to_rgb(h)), 1e-6);
  }
}

TEST(Hsv, HueMatchesOracleAndRange) {
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const Rgb p = random_rgb(rng);
    const double h = hue_degrees(p);
    ASSERT_GE(h, 0.0);
    ASSERT_LT(h, 360.0);
    ASSERT_NEAR(h, lcc::testing::hue_oracle(p.r, p.g, p.b), 1e-9);
  }
}

TEST(Lab, BlackAndWhite) {
  const Lab black = rgb_to_lab(Rgb{0, 0, 0});
  EXPECT_EQ(black.l, 0.0);
  EXPECT_EQ(black.a, 0.0);
  EXPECT_EQ(black.b, 0.0);
  const Lab white = rgb_to_lab(Rgb{1, 1, 1});
  EXPECT_NEAR(white.l, 100.0, 1e-9);
  EXPECT_LT(std::abs(white.a), 1e-4);
  EXPECT_LT(std::abs(white.b), 1e-4);
}

TEST(Lab, MidGrayMatchesPublishedChain) {
  const Lab p = rgb_to_lab(Rgb{0.5, 0.5, 0.5});
  const Lab o = lcc::testing::lab_oracle(0.5, 0.5, 0.5);
  EXPECT_NEAR(p.l, o.l, 1e-4);
  EXPECT_NEAR(p.l, 53.3890, 1e-3);
  EXPECT_LT(std::abs(p.a), 1e-6);
  EXPECT_LT(std::abs(p.b), 1e-6);
}

TEST(Lab, RandomPixelsMatchOracle) {
  Rng rng(7);
  for (int i = 0; i < 5000; ++i) {
    const Rgb p = random_rgb(rng);
    const Lab a = rgb_to_lab(p);
    const Lab o = lcc::testing::lab_oracle(p.r, p.g, p.b);
    ASSERT_NEAR(a.l, o.l, 1e-4);
    ASSERT_NEAR(a.a, o.a, 1e-4);
    ASSERT_NEAR(a.b, o.b, 1e-4);
  }
}

TEST(Lab, GrayAxisIsNeutral) {
  for (int i = 0; i <= 1000; ++i) {
    const double g = i / 1000.0;
    const Lab p = rgb_to_lab(Rgb{g, g, g});
    ASSERT_LT(std::abs(p.a), 1e-6) << g;
    ASSERT_LT(std::abs(p.b), 1e-6) << g;
    ASSERT_GE(p.l, 0.0);
    ASSERT_LE(p.l, 100.0 + 1e-9);
  }
}

TEST(Lab, RoundTrip) {
  Rng rng(8);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Rgb p = random_rgb(rng);
    worst = std::max(worst, max_diff(p, lab_to_rgb(rgb_to_lab(p))));
  }
  EXPECT_LT(worst, 1e-3);
}

TEST(Lab, TransferFunctionsInvert) {
  for (int i = 0; i <= 1000; ++i) {
    const double v = i / 1000.0;
    ASSERT_NEAR(linear_to_srgb(srgb_to_linear(v)), v, 1e-12);
  }
  EXPECT_NEAR(srgb_to_linear(0.04045), 0.04045 / 12.92, 1e-15);
}

TEST(Lab, JacobianMatchesFiniteDifferences) {
  Rng rng(9);
  const double h = 1e-6;
  for (int n = 0; n < 200; ++n) {
    const Rgb p{uniform(rng, 0.05, 0.95), uniform(rng, 0.05, 0.95), uniform(rng, 0.05, 0.95)};
    const Matrix3 j = rgb_to_lab_jacobian(p);
    for (int c = 0; c < 3; ++c) {
      Rgb hi = p, lo = p;
      channel(hi, c) += h;
      channel(lo, c) -= h;
      const Lab a = rgb_to_lab(hi), b = rgb_to_lab(lo);
      const double fd[3] = {(a.l - b.l) / (2 * h), (a.a - b.a) / (2 * h), (a.b - b.b) / (2 * h)};
      for (int r = 0; r < 3; ++r) ASSERT_NEAR(j[r][c], fd[r], 1e-4 * std::max(1.0, std::abs(fd[r])));
    }
  }
}

TEST(DeltaE, Examples) {
  EXPECT_EQ(delta_e(Lab{50, 0, 0}, Lab{50, 0, 0}), 0.0);
  EXPECT_EQ(delta_e(Lab{0, 0, 0}, Lab{3, 4, 0}), 5.0);
}

TEST(DeltaE, MetricProperties) {
  Rng rng(10);
  auto lab = [&] { return Lab{uniform(rng, 0, 100), uniform(rng, -100, 100), uniform(rng, -100, 100)}; };
  for (int i = 0; i < 10000; ++i) {
    const Lab a = lab(), b = lab(), c = lab();
    const double brute = std::sqrt((a.l - b.l) * (a.l - b.l) + (a.a - b.a) * (a.a - b.a) + (a.b - b.b) * (a.b - b.b));
    ASSERT_NEAR(delta_e(a, b), brute, 1e-12);
    ASSERT_EQ(delta_e(a, b), delta_e(b, a));
    ASSERT_GT(delta_e(a, b), 0.0);
    ASSERT_LE(delta_e(a, c), delta_e(a, b) + delta_e(b, c) + 1e-9);
  }
}
