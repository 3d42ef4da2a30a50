#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcc/exif.hpp"

namespace lcc {

inline constexpr int kDefaultHidden = 16;

/// Two fully-connected layers mapping the condition vector to global
/// modulation coefficients: out = W2 relu(W1 c + b1) + b2.
struct ConditionBranch {
  int hidden = 0;
  int outputs = 0;
  std::vector<double> w1;  // hidden x 6, row-major
  std::vector<double> b1;  // hidden
  std::vector<double> w2;  // outputs x hidden, row-major
  std::vector<double> b2;  // outputs

  /// W1 drawn from a seeded uniform in +-1/sqrt(6); W2 and b2 zero, so the
  /// branch emits exactly zero for every condition until trained.
  static ConditionBranch zero_output(int hidden, int outputs, std::uint64_t seed);

  std::size_t parameter_count() const { return w1.size() + b1.size() + w2.size() + b2.size(); }

  struct Activations {
    std::vector<double> pre;  // W1 c + b1
    std::vector<double> out;
  };
  Activations forward(const NormalizedCondition& cond) const;

  /// Accumulates parameter gradients into `grad` (same shape as *this)
  /// given d loss / d out.
  void backward(const NormalizedCondition& cond, const Activations& act,
                std::span<const double> d_out, ConditionBranch& grad) const;

  ConditionBranch zeros_like() const;

  friend bool operator==(const ConditionBranch&, const ConditionBranch&) = default;
};

}  // namespace lcc
