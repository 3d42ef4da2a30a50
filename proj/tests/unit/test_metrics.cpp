#include <gtest/gtest.h>

#include <cmath>

#include "lcc/metrics.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace lcc;
using lcc::testing::Rng;

TEST(Psnr, IdenticalIsInfinite) {
  Rng rng(1);
  const ImageRGB a = lcc::testing::random_image(8, 8, rng);
  EXPECT_TRUE(std::isinf(psnr(a, a)));
  EXPECT_GT(psnr(a, a), 0.0);
}

TEST(Psnr, UniformOffsetIsTwentyDecibels) {
  const ImageRGB a(16, 16, Rgb{0, 0, 0}), b(16, 16, Rgb{0.1, 0.1, 0.1});
  // 0.1 is not representable; the sum over 768 samples drifts a few ulp.
  EXPECT_NEAR(mse(a, b), 0.01, 1e-15);
  EXPECT_NEAR(psnr(a, b), 20.0, 1e-12);
}

TEST(Psnr, Symmetric) {
  Rng rng(2);
  const ImageRGB a = lcc::testing::random_image(8, 8, rng), b = lcc::testing::random_image(8, 8, rng);
  EXPECT_EQ(psnr(a, b), psnr(b, a));
}

TEST(Psnr, ShapeMismatch) { EXPECT_THROW(psnr(ImageRGB(2, 2), ImageRGB(3, 2)), std::invalid_argument); }

TEST(Ssim, SelfIsOne) {
  Rng rng(3);
  for (int size : {4, 11, 24}) {
    const ImageRGB a = lcc::testing::random_image(size, size + 3, rng);
    EXPECT_EQ(ssim(a, a), 1.0) << size;
  }
}

TEST(Ssim, MatchesWindowedOracle) {
  Rng rng(4);
  for (int n = 0; n < 10; ++n) {
    const ImageRGB a = lcc::testing::random_image(20, 16, rng);
    ImageRGB b = a;
    for (Rgb& p : b.pixels()) p = {p.r * 0.8 + lcc::testing::uniform(rng, 0, 0.2), p.g, p.b * 0.9};
    ASSERT_NEAR(ssim(a, b), lcc::testing::ssim_oracle(a, b), 1e-6);
  }
}

TEST(Ssim, SmallImagesUseClippedWindow) {
  Rng rng(5);
  const ImageRGB a = lcc::testing::random_image(6, 4, rng), b = lcc::testing::random_image(6, 4, rng);
  EXPECT_NEAR(ssim(a, b), lcc::testing::ssim_oracle(a, b), 1e-6);
}

TEST(Ssim, BoundedAndSymmetric) {
  Rng rng(6);
  for (int n = 0; n < 20; ++n) {
    const ImageRGB a = lcc::testing::random_image(12, 12, rng), b = lcc::testing::random_image(12, 12, rng);
    const double s = ssim(a, b);
    EXPECT_GE(s, -1.0);
    EXPECT_LE(s, 1.0);
    EXPECT_NEAR(s, ssim(b, a), 1e-12);
  }
}

TEST(MaxAbsDifference, Basic) {
  const ImageRGB a(2, 1, Rgb{0.1, 0.2, 0.3});
  ImageRGB b = a;
  b[1].g = 0.7;
  EXPECT_DOUBLE_EQ(max_abs_difference(a, b), 0.5);
}
