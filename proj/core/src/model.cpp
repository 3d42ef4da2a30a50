#include "lcc/model.hpp"

#include <stdexcept>

#include "lcc/color.hpp"

namespace lcc {

namespace {

constexpr std::uint64_t kStage2BranchSeedOffset = 0x9e3779b97f4a7c15ULL;

template <class Branch, class Fn>
void visit_branch(Branch& b, Fn&& fn) {
  for (auto* v : {&b.w1, &b.b1, &b.w2, &b.b2})
    for (auto& x : *v) fn(x);
}

// Params may be const or mutable; the visiting order is the flat layout.
template <class Params, class Fn>
void visit_params(Params& p, Fn&& fn) {
  for (auto& k : p.stage1_curve.knots()) fn(k);
  visit_branch(p.stage1_branch, fn);
  for (auto& c : p.stage2_curves)
    for (auto& k : c.knots()) fn(k);
  for (auto& s : p.spatial) {
    fn(s.a);
    fn(s.b);
    fn(s.c);
    fn(s.d);
  }
  visit_branch(p.stage2_branch, fn);
}

std::array<double, kChannelPairs> stage2_gains(const ConditionBranch::Activations& act) {
  std::array<double, kChannelPairs> gamma{};
  for (int k = 0; k < kChannelPairs; ++k) gamma[k] = 1.0 + act.out[k];
  return gamma;
}

void check_input(const ImageRGB& img) {
  if (img.empty()) throw std::invalid_argument("model: empty image");
}

}  // namespace

EnhancerParams EnhancerParams::identity(int knots, int hidden, std::uint64_t seed) {
  EnhancerParams p;
  p.stage1_curve = ToneCurve::identity(knots);
  p.stage1_branch = ConditionBranch::zero_output(hidden, knots, seed);
  for (int o = 0; o < 3; ++o)
    for (int i = 0; i < 3; ++i)
      p.stage2_curves[o * 3 + i] = o == i ? ToneCurve::identity(knots) : ToneCurve::zero(knots);
  p.stage2_branch = ConditionBranch::zero_output(hidden, kChannelPairs, seed ^ kStage2BranchSeedOffset);
  return p;
}

std::size_t EnhancerParams::parameter_count() const {
  std::size_t n = 0;
  visit_params(*this, [&](double) { ++n; });
  return n;
}

std::vector<double> EnhancerParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  visit_params(*this, [&](double x) { flat.push_back(x); });
  return flat;
}

void EnhancerParams::assign(std::span<const double> flat) {
  if (flat.size() != parameter_count())
    throw std::invalid_argument("EnhancerParams::assign: expected " + std::to_string(parameter_count()) +
                                " values, got " + std::to_string(flat.size()));
  std::size_t i = 0;
  visit_params(*this, [&](double& x) { x = flat[i++]; });
}

EnhancerParams EnhancerParams::zeros_like() const {
  EnhancerParams z = *this;
  visit_params(z, [](double& x) { x = 0.0; });
  return z;
}

Stage1Result stage1_forward(const ImageRGB& img, const NormalizedCondition& cond,
                            const EnhancerParams& p) {
  check_input(img);
  const auto act = p.stage1_branch.forward(cond);
  const ToneCurve curve = offset_curve(p.stage1_curve, act.out);
  const Plane y = luma(img);
  Plane y_new(y.width(), y.height());
  for (std::size_t i = 0; i < y.size(); ++i) y_new[i] = curve(y[i]);
  GainMap gain = compute_gainmap(y_new, y);
  ImageRGB bright = apply_gainmap(img, gain, Clamp::kNo);
  return {std::move(bright), std::move(gain)};
}

ImageRGB stage2_forward_unclamped(const ImageRGB& bright, const NormalizedCondition& cond,
                                  const EnhancerParams& p) {
  check_input(bright);
  const auto gamma = stage2_gains(p.stage2_branch.forward(cond));
  const int w = bright.width();
  const int h = bright.height();
  ImageRGB out(w, h);
  for (int y = 0; y < h; ++y) {
    const double v = static_cast<double>(y) / h;
    for (int x = 0; x < w; ++x) {
      const double u = static_cast<double>(x) / w;
      const Rgb& in = bright.at(x, y);
      Rgb& o = out.at(x, y);
      for (int oc = 0; oc < 3; ++oc) {
        double s = 0.0;
        for (int ic = 0; ic < 3; ++ic) {
          const int k = oc * 3 + ic;
          s += gamma[k] * p.stage2_curves[k](channel(in, ic));
        }
        channel(o, oc) = s + p.spatial[oc](u, v);
      }
    }
  }
  return out;
}

ImageRGB stage2_forward(const ImageRGB& bright, const NormalizedCondition& cond,
                        const EnhancerParams& p) {
  return clamped(stage2_forward_unclamped(bright, cond, p));
}

ForwardTrace forward_trace(const ImageRGB& img, const NormalizedCondition& cond,
                           const EnhancerParams& p) {
  Stage1Result s1 = stage1_forward(img, cond, p);
  ImageRGB pre = stage2_forward_unclamped(s1.bright, cond, p);
  ImageRGB out = clamped(pre);
  return {std::move(s1.bright), std::move(s1.gain), std::move(pre), std::move(out)};
}

ImageRGB forward(const ImageRGB& img, const NormalizedCondition& cond, const EnhancerParams& p) {
  return clamped(stage2_forward_unclamped(stage1_forward(img, cond, p).bright, cond, p));
}

namespace {

EnhancerParams backward_impl(const ImageRGB& img, const NormalizedCondition& cond,
                             const EnhancerParams& p, const GradientImage& grad_out,
                             const GradientImage* grad_bright) {
  check_input(img);
  if (!img.same_shape(grad_out) || (grad_bright && !img.same_shape(*grad_bright)))
    throw std::invalid_argument("backward: gradient shape does not match image");

  const auto act1 = p.stage1_branch.forward(cond);
  const ToneCurve curve1 = offset_curve(p.stage1_curve, act1.out);
  const auto act2 = p.stage2_branch.forward(cond);
  const auto gamma = stage2_gains(act2);

  EnhancerParams grad = p.zeros_like();
  std::vector<double> d_knots1(curve1.knot_count(), 0.0);
  std::array<double, kChannelPairs> d_gamma{};

  const int w = img.width();
  const int h = img.height();
  for (int y = 0; y < h; ++y) {
    const double v = static_cast<double>(y) / h;
    for (int x = 0; x < w; ++x) {
      const double u = static_cast<double>(x) / w;
      const Rgb& in = img.at(x, y);
      const double y_in = luma(in);
      const double y_out = curve1(y_in);
      const double g = pixel_gain(y_out, y_in);
      const Rgb bright{in.r * g, in.g * g, in.b * g};

      std::array<double, 3> d_bright{};
      if (grad_bright) {
        const Rgb& gb = grad_bright->at(x, y);
        d_bright = {gb.r, gb.g, gb.b};
      }

      const Rgb& go = grad_out.at(x, y);
      for (int oc = 0; oc < 3; ++oc) {
        const double upstream = channel(go, oc);
        if (upstream == 0.0) continue;
        // Same evaluation order as stage2_forward_unclamped.
        double pre = 0.0;
        for (int ic = 0; ic < 3; ++ic) {
          const int k = oc * 3 + ic;
          pre += gamma[k] * p.stage2_curves[k](channel(bright, ic));
        }
        pre += p.spatial[oc](u, v);
        if (pre < 0.0 || pre > 1.0) continue;  // clamped

        for (int ic = 0; ic < 3; ++ic) {
          const int k = oc * 3 + ic;
          const ToneCurve& c = p.stage2_curves[k];
          const double b = channel(bright, ic);
          d_gamma[k] += upstream * c(b);
          c.accumulate_knot_grad(b, upstream * gamma[k], grad.stage2_curves[k].knots());
          d_bright[ic] += upstream * gamma[k] * c.slope(b);
        }
        SpatialTerm& s = grad.spatial[oc];
        s.a += upstream * u;
        s.b += upstream * v;
        s.c += upstream * u * v;
        s.d += upstream;
      }

      // bright = in * g, g = y_out / y_in on the active branch.
      if (y_in < kDefaultGainEpsilon || y_out < 0.0) continue;
      const double d_gain = d_bright[0] * in.r + d_bright[1] * in.g + d_bright[2] * in.b;
      if (d_gain == 0.0) continue;
      curve1.accumulate_knot_grad(y_in, d_gain / y_in, d_knots1);
    }
  }

  auto knots1 = grad.stage1_curve.knots();
  for (std::size_t i = 0; i < d_knots1.size(); ++i) knots1[i] += d_knots1[i];
  p.stage1_branch.backward(cond, act1, d_knots1, grad.stage1_branch);
  p.stage2_branch.backward(cond, act2, d_gamma, grad.stage2_branch);
  return grad;
}

}  // namespace

EnhancerParams backward(const ImageRGB& img, const NormalizedCondition& cond,
                        const EnhancerParams& p, const GradientImage& grad_out) {
  return backward_impl(img, cond, p, grad_out, nullptr);
}

EnhancerParams backward(const ImageRGB& img, const NormalizedCondition& cond,
                        const EnhancerParams& p, const GradientImage& grad_out,
                        const GradientImage& grad_bright) {
  return backward_impl(img, cond, p, grad_out, &grad_bright);
}

}  // namespace lcc
