#include <benchmark/benchmark.h>

#include "common.hpp"
#include "lcc/color.hpp"

namespace {

void BM_RgbToYuv(benchmark::State& state) {
  const lcc::ImageRGB img = bench_image(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcc::rgb_to_yuv(img));
  state.SetItemsProcessed(state.iterations() * img.size());
}
BENCHMARK(BM_RgbToYuv)->Arg(64)->Arg(512);

void BM_RgbToLabPixel(benchmark::State& state) {
  const lcc::ImageRGB img = bench_image(256, 256);
  for (auto _ : state) {
    for (const lcc::Rgb& p : img.pixels()) benchmark::DoNotOptimize(lcc::rgb_to_lab(p));
  }
  state.SetItemsProcessed(state.iterations() * img.size());
}
BENCHMARK(BM_RgbToLabPixel);

void BM_HueDegrees(benchmark::State& state) {
  const lcc::ImageRGB img = bench_image(256, 256);
  for (auto _ : state) {
    for (const lcc::Rgb& p : img.pixels()) benchmark::DoNotOptimize(lcc::hue_degrees(p));
  }
  state.SetItemsProcessed(state.iterations() * img.size());
}
BENCHMARK(BM_HueDegrees);

}  // namespace
