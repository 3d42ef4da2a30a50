#include <benchmark/benchmark.h>

#include "common.hpp"
#include "lcc/metrics.hpp"
#include "lcc/palette.hpp"

namespace {

void BM_HuePaletteLoss(benchmark::State& state) {
  const lcc::ImageRGB out = bench_image(state.range(0), state.range(0), 1);
  const lcc::ImageRGB gt = bench_image(state.range(0), state.range(0), 2);
  const lcc::HuePaletteMask masks = lcc::build_masks(gt);
  for (auto _ : state) benchmark::DoNotOptimize(lcc::hue_palette_loss(out, gt, masks));
  state.SetItemsProcessed(state.iterations() * out.size());
}
BENCHMARK(BM_HuePaletteLoss)->Arg(64)->Arg(500);

void BM_BuildMasks(benchmark::State& state) {
  const lcc::ImageRGB gt = bench_image(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcc::build_masks(gt));
}
BENCHMARK(BM_BuildMasks)->Arg(500);

void BM_Ssim(benchmark::State& state) {
  const lcc::ImageRGB a = bench_image(state.range(0), state.range(0), 1);
  const lcc::ImageRGB b = bench_image(state.range(0), state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lcc::ssim(a, b));
}
BENCHMARK(BM_Ssim)->Arg(64)->Arg(500);

void BM_Psnr(benchmark::State& state) {
  const lcc::ImageRGB a = bench_image(500, 500, 1);
  const lcc::ImageRGB b = bench_image(500, 500, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lcc::psnr(a, b));
}
BENCHMARK(BM_Psnr);

}  // namespace
