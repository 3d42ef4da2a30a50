#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lcc/image_io.hpp"
#include "synthetic.hpp"

using namespace lcc;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lcc_test_image_io";
  fs::create_directories(dir);
  return dir / name;
}

ImageRGB quantized_image(int w, int h, unsigned max_value) {
  ImageRGB img(w, h);
  unsigned v = 0;
  for (Rgb& p : img.pixels()) {
    p = {double(v % (max_value + 1)) / max_value, double((v * 7 + 3) % (max_value + 1)) / max_value,
         double((v * 13 + 5) % (max_value + 1)) / max_value};
    v += 37;
  }
  return img;
}

}  // namespace

TEST(Quantize, RoundsHalfUpAfterClamp) {
  EXPECT_EQ(quantize(0.0, 255), 0u);
  EXPECT_EQ(quantize(1.0, 255), 255u);
  EXPECT_EQ(quantize(-0.3, 255), 0u);
  EXPECT_EQ(quantize(1.7, 255), 255u);
  EXPECT_EQ(quantize(0.5 / 255.0, 255), 1u);
  EXPECT_EQ(quantize(0.49 / 255.0, 255), 0u);
  EXPECT_EQ(quantize(0.5, 65535), 32768u);
}

TEST(ImageIo, Png8RoundTripIsExact) {
  const ImageRGB img = quantized_image(7, 5, 255);
  const fs::path p = scratch("rt8.png");
  write_image(p, img);
  EXPECT_EQ(read_image(p), img);
}

TEST(ImageIo, Png16RoundTripIsExact) {
  const ImageRGB img = quantized_image(6, 4, 65535);
  const fs::path p = scratch("rt16.png");
  write_image(p, img, BitDepth::k16);
  EXPECT_EQ(read_image(p), img);
}

TEST(ImageIo, PpmRoundTripBothDepths) {
  const ImageRGB img8 = quantized_image(3, 9, 255);
  write_image(scratch("rt.ppm"), img8);
  EXPECT_EQ(read_image(scratch("rt.ppm")), img8);
  const ImageRGB img16 = quantized_image(3, 2, 65535);
  write_image(scratch("rt16.ppm"), img16, BitDepth::k16);
  EXPECT_EQ(read_image(scratch("rt16.ppm")), img16);
}

TEST(ImageIo, WriteClampsOutOfRange) {
  ImageRGB img(1, 1, Rgb{-0.5, 1.5, 0.5});
  write_image(scratch("clamp.png"), img);
  const ImageRGB back = read_image(scratch("clamp.png"));
  EXPECT_EQ(back[0].r, 0.0);
  EXPECT_EQ(back[0].g, 1.0);
  EXPECT_EQ(back[0].b, 128.0 / 255.0);
}

TEST(ImageIo, PgmRoundTrip) {
  Plane plane(4, 3);
  for (std::size_t i = 0; i < plane.size(); ++i) plane[i] = double(i * 5000) / 65535.0;
  write_pgm(scratch("plane.pgm"), plane);
  const Plane back = read_pgm(scratch("plane.pgm"));
  ASSERT_EQ(back.size(), plane.size());
  for (std::size_t i = 0; i < plane.size(); ++i) EXPECT_EQ(back[i], plane[i]);
}

TEST(ImageIo, GrayPgmReadsAsNeutralRgb) {
  Plane plane(2, 2, 0.2);
  write_pgm(scratch("gray.pgm"), plane, BitDepth::k8);
  const ImageRGB img = read_image(scratch("gray.pgm"));
  EXPECT_EQ(img[0].r, img[0].g);
  EXPECT_EQ(img[0].g, img[0].b);
  EXPECT_EQ(img[0].r, 51.0 / 255.0);
}

TEST(ImageIo, MissingFileNamesPath) {
  try {
    read_image(scratch("does_not_exist.png"));
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("does_not_exist.png"), std::string::npos);
  }
}

TEST(ImageIo, CorruptFilesThrow) {
  std::ofstream(scratch("bad.png"), std::ios::binary) << "not a png at all";
  EXPECT_THROW(read_image(scratch("bad.png")), IoError);
  std::ofstream(scratch("bad.ppm"), std::ios::binary) << "P6\n4 4\n255\nxx";
  EXPECT_THROW(read_image(scratch("bad.ppm")), IoError);
}

TEST(ImageIo, RecognisesExtensions) {
  EXPECT_TRUE(is_image_file("a.png"));
  EXPECT_TRUE(is_image_file("a.PNG"));
  EXPECT_TRUE(is_image_file("a.ppm"));
  EXPECT_FALSE(is_image_file("a.exif.json"));
  EXPECT_FALSE(is_image_file("a.txt"));
}
