#include "lcc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcc {

ToneCurve::ToneCurve(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw std::invalid_argument("ToneCurve: need at least two knots");
}

ToneCurve ToneCurve::identity(int knots) {
  if (knots < 2) throw std::invalid_argument("ToneCurve: need at least two knots");
  std::vector<double> v(knots);
  for (int i = 0; i < knots; ++i) v[i] = static_cast<double>(i) / (knots - 1);
  return ToneCurve(std::move(v));
}

ToneCurve ToneCurve::zero(int knots) { return constant(0.0, knots); }

ToneCurve ToneCurve::constant(double value, int knots) {
  if (knots < 2) throw std::invalid_argument("ToneCurve: need at least two knots");
  return ToneCurve(std::vector<double>(knots, value));
}

ToneCurve::Locate ToneCurve::locate(double x) const {
  const int segments = knot_count() - 1;
  double pos = x * segments;
  // i / (M - 1) * (M - 1) can land one ulp off the integer; snap it.
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(pos)))
    pos = nearest;
  int seg = static_cast<int>(std::floor(pos));
  seg = std::clamp(seg, 0, segments - 1);
  return {seg, pos - seg};
}

double ToneCurve::operator()(double x) const {
  const Locate l = locate(x);
  const double a = knots_[l.segment];
  const double b = knots_[l.segment + 1];
  if (l.t == 0.0) return a;
  if (l.t == 1.0) return b;
  return a + l.t * (b - a);
}

double ToneCurve::slope(double x) const {
  const Locate l = locate(x);
  return (knots_[l.segment + 1] - knots_[l.segment]) * (knot_count() - 1);
}

void ToneCurve::accumulate_knot_grad(double x, double upstream, std::span<double> grad) const {
  const Locate l = locate(x);
  grad[l.segment] += upstream * (1.0 - l.t);
  grad[l.segment + 1] += upstream * l.t;
}

double ToneCurve::monotonicity_penalty() const {
  double p = 0.0;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const double drop = knots_[i] - knots_[i + 1];
    if (drop > 0.0) p += drop * drop;
  }
  return p;
}

void ToneCurve::accumulate_monotonicity_grad(double weight, std::span<double> grad) const {
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const double drop = knots_[i] - knots_[i + 1];
    if (drop > 0.0) {
      grad[i] += weight * 2.0 * drop;
      grad[i + 1] -= weight * 2.0 * drop;
    }
  }
}

ToneCurve offset_curve(const ToneCurve& base, std::span<const double> offsets) {
  if (offsets.size() != static_cast<std::size_t>(base.knot_count()))
    throw std::invalid_argument("offset_curve: offset count must equal knot count");
  std::vector<double> k(base.knots().begin(), base.knots().end());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += offsets[i];
  return ToneCurve(std::move(k));
}

}  // namespace lcc
