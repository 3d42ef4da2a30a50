#pragma once

#include <random>

#include "lcc/image.hpp"

inline lcc::ImageRGB bench_image(int w, int h, unsigned seed = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  lcc::ImageRGB img(w, h);
  for (lcc::Rgb& p : img.pixels()) p = {u(rng), u(rng), u(rng)};
  return img;
}
