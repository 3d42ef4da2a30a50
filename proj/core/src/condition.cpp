#include "lcc/condition.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace lcc {

ConditionBranch ConditionBranch::zero_output(int hidden, int outputs, std::uint64_t seed) {
  if (hidden < 1 || outputs < 1) throw std::invalid_argument("ConditionBranch: sizes must be >= 1");
  ConditionBranch b;
  b.hidden = hidden;
  b.outputs = outputs;
  b.w1.resize(static_cast<std::size_t>(hidden) * kConditionSize);
  b.b1.assign(hidden, 0.0);
  b.w2.assign(static_cast<std::size_t>(outputs) * hidden, 0.0);
  b.b2.assign(outputs, 0.0);
  std::mt19937_64 rng(seed);
  const double bound = 1.0 / std::sqrt(static_cast<double>(kConditionSize));
  for (double& w : b.w1) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    w = (2.0 * u - 1.0) * bound;
  }
  return b;
}

ConditionBranch ConditionBranch::zeros_like() const {
  ConditionBranch z;
  z.hidden = hidden;
  z.outputs = outputs;
  z.w1.assign(w1.size(), 0.0);
  z.b1.assign(b1.size(), 0.0);
  z.w2.assign(w2.size(), 0.0);
  z.b2.assign(b2.size(), 0.0);
  return z;
}

ConditionBranch::Activations ConditionBranch::forward(const NormalizedCondition& cond) const {
  Activations act;
  act.pre.resize(hidden);
  act.out.resize(outputs);
  for (int h = 0; h < hidden; ++h) {
    double s = b1[h];
    for (std::size_t i = 0; i < kConditionSize; ++i) s += w1[h * kConditionSize + i] * cond[i];
    act.pre[h] = s;
  }
  for (int o = 0; o < outputs; ++o) {
    double s = b2[o];
    for (int h = 0; h < hidden; ++h) s += w2[static_cast<std::size_t>(o) * hidden + h] * std::max(act.pre[h], 0.0);
    act.out[o] = s;
  }
  return act;
}

void ConditionBranch::backward(const NormalizedCondition& cond, const Activations& act,
                               std::span<const double> d_out, ConditionBranch& grad) const {
  std::vector<double> d_hidden(hidden, 0.0);
  for (int o = 0; o < outputs; ++o) {
    const double g = d_out[o];
    if (g == 0.0) continue;
    grad.b2[o] += g;
    for (int h = 0; h < hidden; ++h) {
      const std::size_t idx = static_cast<std::size_t>(o) * hidden + h;
      grad.w2[idx] += g * std::max(act.pre[h], 0.0);
      d_hidden[h] += g * w2[idx];
    }
  }
  for (int h = 0; h < hidden; ++h) {
    if (act.pre[h] <= 0.0) continue;
    const double g = d_hidden[h];
    grad.b1[h] += g;
    for (std::size_t i = 0; i < kConditionSize; ++i) grad.w1[h * kConditionSize + i] += g * cond[i];
  }
}

}  // namespace lcc
