#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lcc/color.hpp"
#include "synthetic.hpp"

namespace lcc::testing {

double hue_oracle(double r, double g, double b) {
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  if (d <= 0.0) return 0.0;
  double h;
  if (mx == r) {
    h = 60.0 * std::fmod((g - b) / d, 6.0);
  } else if (mx == g) {
    h = 60.0 * ((b - r) / d + 2.0);
  } else {
    h = 60.0 * ((r - g) / d + 4.0);
  }
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  return h;
}

double hue_loss_oracle(const ImageRGB& output, const ImageRGB& gt, int bins) {
  const double width = 360.0 / bins;
  double total = 0.0;
  for (int j = 0; j < bins; ++j) {
    double sum = 0.0;
    double count = 0.0;
    for (int y = 0; y < gt.height(); ++y) {
      for (int x = 0; x < gt.width(); ++x) {
        const Rgb& g = gt.at(x, y);
        int bin = static_cast<int>(std::floor(hue_oracle(g.r, g.g, g.b) / width));
        if (bin >= bins) bin = 0;
        if (bin != j) continue;
        const Rgb& o = output.at(x, y);
        sum += std::abs(o.r - g.r) + std::abs(o.g - g.g) + std::abs(o.b - g.b);
        count += 1.0;
      }
    }
    if (count > 0.0) total += sum / count;
  }
  return total;
}

Lab lab_oracle(double r, double g, double b) {
  auto lin = [](double c) { return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4); };
  const double rl = lin(r), gl = lin(g), bl = lin(b);
  const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
  const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
  const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;
  const double delta = 6.0 / 29.0;
  auto f = [&](double t) {
    return t > delta * delta * delta ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
  };
  const double fx = f(x / 0.95047), fy = f(y / 1.0), fz = f(z / 1.08883);
  return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

double ssim_oracle(const ImageRGB& a, const ImageRGB& b, int window, double sigma) {
  const int w = a.width(), h = a.height();
  const int wx = std::min(window, w), wy = std::min(window, h);
  std::vector<double> weight(static_cast<std::size_t>(wx) * wy);
  double norm = 0.0;
  for (int j = 0; j < wy; ++j) {
    for (int i = 0; i < wx; ++i) {
      const double dx = i - (wx - 1) / 2.0, dy = j - (wy - 1) / 2.0;
      weight[j * wx + i] = std::exp(-(dx * dx) / (2 * sigma * sigma)) * std::exp(-(dy * dy) / (2 * sigma * sigma));
      norm += weight[j * wx + i];
    }
  }
  for (double& v : weight) v /= norm;
  auto y_of = [](const Rgb& p) { return 0.299 * p.r + 0.587 * p.g + 0.114 * p.b; };
  const double c1 = 0.01 * 0.01, c2 = 0.03 * 0.03;
  double total = 0.0;
  int windows = 0;
  for (int oy = 0; oy + wy <= h; ++oy) {
    for (int ox = 0; ox + wx <= w; ++ox) {
      double mx = 0, my = 0;
      for (int j = 0; j < wy; ++j)
        for (int i = 0; i < wx; ++i) {
          mx += weight[j * wx + i] * y_of(a.at(ox + i, oy + j));
          my += weight[j * wx + i] * y_of(b.at(ox + i, oy + j));
        }
      double sx = 0, sy = 0, sxy = 0;
      for (int j = 0; j < wy; ++j)
        for (int i = 0; i < wx; ++i) {
          const double dx = y_of(a.at(ox + i, oy + j)) - mx;
          const double dy = y_of(b.at(ox + i, oy + j)) - my;
          sx += weight[j * wx + i] * dx * dx;
          sy += weight[j * wx + i] * dy * dy;
          sxy += weight[j * wx + i] * dx * dy;
        }
      total += ((2 * mx * my + c1) * (2 * sxy + c2)) / ((mx * mx + my * my + c1) * (sx + sy + c2));
      ++windows;
    }
  }
  return total / windows;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> ra, rb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1;
    ra[a[i]] += 1;
    rb[b[i]] += 1;
  }
  auto c2 = [](double n) { return n * (n - 1) / 2; };
  double index = 0, sa = 0, sb = 0;
  for (const auto& [k, n] : joint) index += c2(n);
  for (const auto& [k, n] : ra) sa += c2(n);
  for (const auto& [k, n] : rb) sb += c2(n);
  const double expected = sa * sb / c2(static_cast<double>(a.size()));
  const double max_index = (sa + sb) / 2;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

double curve_oracle(const std::vector<double>& knots, double x) {
  const int segs = static_cast<int>(knots.size()) - 1;
  const double pos = x * segs;
  const int s = std::clamp(static_cast<int>(std::floor(pos)), 0, segs - 1);
  const double t = pos - s;
  return knots[s] * (1 - t) + knots[s + 1] * t;
}

namespace {

std::vector<double> branch_oracle(const ConditionBranch& br, const NormalizedCondition& c) {
  std::vector<double> hidden(br.hidden);
  for (int j = 0; j < br.hidden; ++j) {
    double s = br.b1[j];
    for (int i = 0; i < 6; ++i) s += br.w1[j * 6 + i] * c[i];
    hidden[j] = s > 0 ? s : 0;
  }
  std::vector<double> out(br.outputs);
  for (int k = 0; k < br.outputs; ++k) {
    double s = br.b2[k];
    for (int j = 0; j < br.hidden; ++j) s += br.w2[k * br.hidden + j] * hidden[j];
    out[k] = s;
  }
  return out;
}

std::vector<double> as_vector(const ToneCurve& c) { return {c.knots().begin(), c.knots().end()}; }

}  // namespace

ImageRGB stage2_oracle(const ImageRGB& bright, const NormalizedCondition& cond, const EnhancerParams& p) {
  const std::vector<double> out = branch_oracle(p.stage2_branch, cond);
  ImageRGB res(bright.width(), bright.height());
  for (int y = 0; y < bright.height(); ++y) {
    for (int x = 0; x < bright.width(); ++x) {
      const double u = static_cast<double>(x) / bright.width();
      const double v = static_cast<double>(y) / bright.height();
      const Rgb& in = bright.at(x, y);
      const double vals[3] = {in.r, in.g, in.b};
      double o[3];
      for (int oc = 0; oc < 3; ++oc) {
        double s = 0;
        for (int ic = 0; ic < 3; ++ic)
          s += (1.0 + out[oc * 3 + ic]) * curve_oracle(as_vector(p.stage2_curves[oc * 3 + ic]), vals[ic]);
        const SpatialTerm& t = p.spatial[oc];
        o[oc] = s + t.a * u + t.b * v + t.c * u * v + t.d;
      }
      res.at(x, y) = {o[0], o[1], o[2]};
    }
  }
  return res;
}

namespace {

bool near_interior_knot(double x, int knots, double margin) {
  const int segs = knots - 1;
  for (int i = 1; i < segs; ++i)
    if (std::abs(x - static_cast<double>(i) / segs) < margin) return true;
  return false;
}

bool relu_clear(const ConditionBranch& br, const NormalizedCondition& c, double margin) {
  for (double v : br.forward(c).pre)
    if (std::abs(v) < margin) return false;
  return true;
}

// True when no quantity sits within `margin` of a non-smooth point.
bool smooth_instance(const ImageRGB& img, const NormalizedCondition& cond, const EnhancerParams& p,
                     double margin) {
  if (!relu_clear(p.stage1_branch, cond, margin) || !relu_clear(p.stage2_branch, cond, margin)) return false;
  const std::vector<double> off = branch_oracle(p.stage1_branch, cond);
  std::vector<double> knots1 = as_vector(p.stage1_curve);
  for (std::size_t i = 0; i < knots1.size(); ++i) knots1[i] += off[i];
  const int m = p.knot_count();
  for (const Rgb& px : img.pixels()) {
    const double y = 0.299 * px.r + 0.587 * px.g + 0.114 * px.b;
    const double y_new = curve_oracle(knots1, y);
    if (y < 1e-4 + margin || y_new < margin) return false;
    if (near_interior_knot(y, m, margin)) return false;
    const double g = y_new / y;
    for (double c : {px.r * g, px.g * g, px.b * g})
      if (near_interior_knot(c, m, margin)) return false;
  }
  const ForwardTrace t = forward_trace(img, cond, p);
  for (const Rgb& px : t.pre_clamp.pixels())
    for (double c : {px.r, px.g, px.b})
      if (c < margin || c > 1.0 - margin) return false;
  return true;
}

double objective(const ImageRGB& img, const NormalizedCondition& cond, const EnhancerParams& p,
                 const GradientImage& w_out, const GradientImage& w_bright) {
  const ForwardTrace t = forward_trace(img, cond, p);
  double s = 0.0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    s += w_out[i].r * t.output[i].r + w_out[i].g * t.output[i].g + w_out[i].b * t.output[i].b;
    s += w_bright[i].r * t.bright[i].r + w_bright[i].g * t.bright[i].g + w_bright[i].b * t.bright[i].b;
  }
  return s;
}

}  // namespace

GradCheckResult gradient_check(std::uint64_t seed, double step, double margin) {
  Rng rng(seed);
  GradCheckResult res;
  ImageRGB img;
  NormalizedCondition cond;
  EnhancerParams p;
  for (;;) {
    img = random_image(4, 4, rng, 0.05, 0.6);
    cond = random_condition(rng);
    p = random_params(rng);
    if (smooth_instance(img, cond, p, margin)) break;
    ++res.rejected;
  }
  const GradientImage w_out = random_image(4, 4, rng, -1.0, 1.0);
  const GradientImage w_bright = random_image(4, 4, rng, -1.0, 1.0);
  const std::vector<double> analytic = backward(img, cond, p, w_out, w_bright).flatten();

  std::vector<double> flat = p.flatten();
  EnhancerParams probe = p;
  res.parameters = flat.size();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const double orig = flat[i];
    flat[i] = orig + step;
    probe.assign(flat);
    const double plus = objective(img, cond, probe, w_out, w_bright);
    flat[i] = orig - step;
    probe.assign(flat);
    const double minus = objective(img, cond, probe, w_out, w_bright);
    flat[i] = orig;
    const double numeric = (plus - minus) / (2.0 * step);
    const double scale = std::max({std::abs(analytic[i]), std::abs(numeric), 1e-6});
    res.max_rel_error = std::max(res.max_rel_error, std::abs(analytic[i] - numeric) / scale);
  }
  return res;
}

}  // namespace lcc::testing
