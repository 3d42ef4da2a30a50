#include <benchmark/benchmark.h>

#include "common.hpp"
#include "lcc/model.hpp"

namespace {

lcc::NormalizedCondition bench_condition() {
  lcc::NormalizedCondition c;
  c.values = {0.456, 242.3, 6.43, 7.05, 5.6, 0.02};
  return c;
}

void BM_Forward(benchmark::State& state) {
  const lcc::ImageRGB img = bench_image(state.range(0), state.range(0));
  const lcc::EnhancerParams p = lcc::EnhancerParams::identity();
  const lcc::NormalizedCondition c = bench_condition();
  for (auto _ : state) benchmark::DoNotOptimize(lcc::forward(img, c, p));
  state.SetItemsProcessed(state.iterations() * img.size());
}
BENCHMARK(BM_Forward)->Arg(64)->Arg(500);

void BM_Backward(benchmark::State& state) {
  const lcc::ImageRGB img = bench_image(state.range(0), state.range(0));
  const lcc::EnhancerParams p = lcc::EnhancerParams::identity();
  const lcc::NormalizedCondition c = bench_condition();
  const lcc::GradientImage w = bench_image(state.range(0), state.range(0), 7);
  const lcc::GradientImage zero(img.width(), img.height());
  for (auto _ : state) benchmark::DoNotOptimize(lcc::backward(img, c, p, w, zero));
  state.SetItemsProcessed(state.iterations() * img.size());
}
BENCHMARK(BM_Backward)->Arg(64)->Arg(500);

}  // namespace
