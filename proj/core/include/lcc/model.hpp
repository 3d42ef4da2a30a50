#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lcc/condition.hpp"
#include "lcc/curve.hpp"
#include "lcc/exif.hpp"
#include "lcc/image.hpp"
#include "lcc/luminance.hpp"

namespace lcc {

/// s(u, v) = a*u + b*v + c*u*v + d with u = x / W, v = y / H.
struct SpatialTerm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double operator()(double u, double v) const { return a * u + b * v + c * u * v + d; }
  friend bool operator==(const SpatialTerm&, const SpatialTerm&) = default;
};

inline constexpr int kChannelPairs = 9;

/// Learnable state of the two-stage enhancer.
///
/// Stage 1 (brightness): a tone curve on luma whose knots are shifted by the
/// stage-1 condition branch; its output luma divided by input luma is the
/// gainmap applied to all three channels.
///
/// Stage 2 (colour): output channel o is sum_i gamma[o][i] * curve[o][i](in_i)
/// plus a spatial term, where gamma = 1 + stage-2 branch output.
struct EnhancerParams {
  ToneCurve stage1_curve;
  ConditionBranch stage1_branch;  // outputs = knot count (additive offsets)
  std::array<ToneCurve, kChannelPairs> stage2_curves;  // index o * 3 + i
  std::array<SpatialTerm, 3> spatial;
  ConditionBranch stage2_branch;  // outputs = 9 (multiplicative gains - 1)

  /// Identity mapping for every input and condition.
  static EnhancerParams identity(int knots = kDefaultKnots, int hidden = kDefaultHidden,
                                 std::uint64_t seed = 6);

  int knot_count() const { return stage1_curve.knot_count(); }
  int hidden() const { return stage1_branch.hidden; }

  std::size_t parameter_count() const;
  /// Fixed order: stage-1 knots, stage-1 branch (w1, b1, w2, b2), stage-2
  /// curves (o-major), spatial (a, b, c, d per channel), stage-2 branch.
  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);
  EnhancerParams zeros_like() const;

  friend bool operator==(const EnhancerParams&, const EnhancerParams&) = default;
};

struct Stage1Result {
  ImageRGB bright;  // unclamped
  GainMap gain;
};

Stage1Result stage1_forward(const ImageRGB& img, const NormalizedCondition& cond,
                            const EnhancerParams& p);
/// Pre-clamp colour stage output.
ImageRGB stage2_forward_unclamped(const ImageRGB& bright, const NormalizedCondition& cond,
                                  const EnhancerParams& p);
ImageRGB stage2_forward(const ImageRGB& bright, const NormalizedCondition& cond,
                        const EnhancerParams& p);
/// Full cascade, clamped once at the end.
ImageRGB forward(const ImageRGB& img, const NormalizedCondition& cond, const EnhancerParams& p);

struct ForwardTrace {
  ImageRGB bright;
  GainMap gain;
  ImageRGB pre_clamp;
  ImageRGB output;
};
ForwardTrace forward_trace(const ImageRGB& img, const NormalizedCondition& cond,
                           const EnhancerParams& p);

/// Gradient of a scalar loss with respect to every parameter, given
/// d loss / d output (clamped output) and optionally d loss / d bright.
/// Pixels whose pre-clamp value lies outside [0, 1] pass no gradient.
EnhancerParams backward(const ImageRGB& img, const NormalizedCondition& cond,
                        const EnhancerParams& p, const GradientImage& grad_out);
EnhancerParams backward(const ImageRGB& img, const NormalizedCondition& cond,
                        const EnhancerParams& p, const GradientImage& grad_out,
                        const GradientImage& grad_bright);

}  // namespace lcc
