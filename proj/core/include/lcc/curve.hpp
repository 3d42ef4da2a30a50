#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lcc {

inline constexpr int kDefaultKnots = 17;

/// Piecewise-linear map sampled at uniform abscissae i / (M - 1) on [0, 1].
/// Outside [0, 1] the end segments are extended linearly.
class ToneCurve {
 public:
  ToneCurve() = default;
  explicit ToneCurve(std::vector<double> knots);

  static ToneCurve identity(int knots = kDefaultKnots);
  static ToneCurve zero(int knots = kDefaultKnots);
  static ToneCurve constant(double value, int knots = kDefaultKnots);

  int knot_count() const { return static_cast<int>(knots_.size()); }
  std::span<double> knots() { return knots_; }
  std::span<const double> knots() const { return knots_; }
  double knot(int i) const { return knots_[i]; }

  /// Segment index and interpolation weight for x. At x == i / (M - 1) the
  /// weight is exactly 0 (or the segment ends at knot i with weight 1 for the
  /// last knot), so evaluation returns the knot value.
  struct Locate {
    int segment;
    double t;  // position inside the segment; may leave [0, 1] when extrapolating
  };
  Locate locate(double x) const;

  double operator()(double x) const;
  /// d curve / d x at x (slope of the containing segment).
  double slope(double x) const;

  /// Adds d loss / d knots for one evaluation at x scaled by `upstream`.
  void accumulate_knot_grad(double x, double upstream, std::span<double> grad) const;

  /// Sum of squared decreases between consecutive knots.
  double monotonicity_penalty() const;
  void accumulate_monotonicity_grad(double weight, std::span<double> grad) const;

  friend bool operator==(const ToneCurve&, const ToneCurve&) = default;

 private:
  std::vector<double> knots_;
};

/// Same curve with knots (base + offsets).
ToneCurve offset_curve(const ToneCurve& base, std::span<const double> offsets);

}  // namespace lcc
