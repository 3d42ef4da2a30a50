#include "lcc/color.hpp"

#include <cmath>

namespace lcc {

namespace {

// YUV coefficients in thousandths. Integer entries keep the row sums exact
// (1000, 0, 0), so white maps to (1, 0, 0) without rounding residue.
constexpr std::array<std::array<long long, 3>, 3> kYuvThousandths = {{
    {299, 587, 114},
    {-169, -331, 500},
    {500, -419, -81},
}};

struct IntInverse {
  std::array<std::array<long long, 3>, 3> adj{};
  long long det = 0;
};

constexpr IntInverse integer_inverse(const std::array<std::array<long long, 3>, 3>& m) {
  IntInverse r;
  r.adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  r.adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  r.adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  r.adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  r.adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  r.adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  r.adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  r.adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  r.adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  r.det = m[0][0] * r.adj[0][0] + m[0][1] * r.adj[1][0] + m[0][2] * r.adj[2][0];
  return r;
}

constexpr IntInverse kYuvInverse = integer_inverse(kYuvThousandths);
static_assert(kYuvInverse.det != 0);

// (M/1000)^-1 = 1000 * adj(M) / det(M)
constexpr double kInverseScale = 1000.0 / static_cast<double>(kYuvInverse.det);

double row_dot(const std::array<long long, 3>& row, double a, double b, double c) {
  return static_cast<double>(row[0]) * a + static_cast<double>(row[1]) * b +
         static_cast<double>(row[2]) * c;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// sRGB primaries, D65.
constexpr Matrix3 kRgbToXyz = {{
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
}};

constexpr double kLabEpsilon = 216.0 / 24389.0;
constexpr double kLabKappa = 24389.0 / 27.0;

std::array<double, 3> mul(const Matrix3& m, double a, double b, double c) {
  return {m[0][0] * a + m[0][1] * b + m[0][2] * c,
          m[1][0] * a + m[1][1] * b + m[1][2] * c,
          m[2][0] * a + m[2][1] * b + m[2][2] * c};
}

Matrix3 inverse(const Matrix3& m) {
  const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  Matrix3 r{};
  r[0][0] = c00 / det;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  r[1][0] = c01 / det;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  r[2][0] = c02 / det;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return r;
}

const Matrix3& xyz_to_rgb() {
  static const Matrix3 m = inverse(kRgbToXyz);
  return m;
}

// Reference white from the same matrix, so neutral inputs give a = b = 0.
const std::array<double, 3>& white_xyz() {
  static const std::array<double, 3> w = mul(kRgbToXyz, 1.0, 1.0, 1.0);
  return w;
}

double lab_f(double t) {
  return t > kLabEpsilon ? std::cbrt(t) : (kLabKappa * t + 16.0) / 116.0;
}

double lab_f_derivative(double t) {
  if (t > kLabEpsilon) {
    const double c = std::cbrt(t);
    return 1.0 / (3.0 * c * c);
  }
  return kLabKappa / 116.0;
}

double lab_f_inverse(double f) {
  const double f3 = f * f * f;
  return f3 > kLabEpsilon ? f3 : (116.0 * f - 16.0) / kLabKappa;
}

double srgb_derivative(double v) {
  const double m = std::abs(v);
  if (m <= 0.04045) return 1.0 / 12.92;
  return 2.4 / 1.055 * std::pow((m + 0.055) / 1.055, 1.4);
}

template <class Out, class In, class Fn>
Image<Out> map_pixels(const Image<In>& img, Fn&& fn) {
  Image<Out> out(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = fn(img[i]);
  return out;
}

}  // namespace

ImageRGB clamped(const ImageRGB& img) {
  return map_pixels<Rgb>(img, [](const Rgb& p) {
    return Rgb{clamp01(p.r), clamp01(p.g), clamp01(p.b)};
  });
}

Yuv rgb_to_yuv(const Rgb& p) {
  return {row_dot(kYuvThousandths[0], p.r, p.g, p.b) / 1000.0,
          row_dot(kYuvThousandths[1], p.r, p.g, p.b) / 1000.0,
          row_dot(kYuvThousandths[2], p.r, p.g, p.b) / 1000.0};
}

double luma(const Rgb& p) { return row_dot(kYuvThousandths[0], p.r, p.g, p.b) / 1000.0; }

Rgb yuv_to_rgb_unclamped(const Yuv& p) {
  return {row_dot(kYuvInverse.adj[0], p.y, p.u, p.v) * kInverseScale,
          row_dot(kYuvInverse.adj[1], p.y, p.u, p.v) * kInverseScale,
          row_dot(kYuvInverse.adj[2], p.y, p.u, p.v) * kInverseScale};
}

Rgb yuv_to_rgb(const Yuv& p) {
  const Rgb q = yuv_to_rgb_unclamped(p);
  return {clamp01(q.r), clamp01(q.g), clamp01(q.b)};
}

ImageYUV rgb_to_yuv(const ImageRGB& img) {
  return map_pixels<Yuv>(img, [](const Rgb& p) { return rgb_to_yuv(p); });
}

ImageRGB yuv_to_rgb(const ImageYUV& img) {
  return map_pixels<Rgb>(img, [](const Yuv& p) { return yuv_to_rgb(p); });
}

Plane luma(const ImageRGB& img) {
  Plane out(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = luma(img[i]);
  return out;
}

Matrix3 yuv_matrix() {
  Matrix3 m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = static_cast<double>(kYuvThousandths[r][c]) / 1000.0;
  return m;
}

Matrix3 yuv_inverse_matrix() {
  Matrix3 m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = static_cast<double>(kYuvInverse.adj[r][c]) * kInverseScale;
  return m;
}

Hsv rgb_to_hsv(const Rgb& p) {
  const double mx = std::max({p.r, p.g, p.b});
  const double mn = std::min({p.r, p.g, p.b});
  const double delta = mx - mn;
  Hsv out{0.0, 0.0, mx};
  if (delta <= 0.0) return out;
  out.s = mx > 0.0 ? delta / mx : 0.0;
  double h;
  if (mx == p.r) {
    h = (p.g - p.b) / delta;
  } else if (mx == p.g) {
    h = 2.0 + (p.b - p.r) / delta;
  } else {
    h = 4.0 + (p.r - p.g) / delta;
  }
  h *= 60.0;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

double hue_degrees(const Rgb& p) { return rgb_to_hsv(p).h; }

Rgb hsv_to_rgb(const Hsv& p) {
  if (p.s <= 0.0) return {p.v, p.v, p.v};
  double h = std::fmod(p.h, 360.0);
  if (h < 0.0) h += 360.0;
  h /= 60.0;
  const int sector = std::min(static_cast<int>(std::floor(h)), 5);
  const double f = h - sector;
  const double a = p.v * (1.0 - p.s);
  const double b = p.v * (1.0 - p.s * f);
  const double c = p.v * (1.0 - p.s * (1.0 - f));
  switch (sector) {
    case 0: return {p.v, c, a};
    case 1: return {b, p.v, a};
    case 2: return {a, p.v, c};
    case 3: return {a, b, p.v};
    case 4: return {c, a, p.v};
    default: return {p.v, a, b};
  }
}

ImageHSV rgb_to_hsv(const ImageRGB& img) {
  return map_pixels<Hsv>(img, [](const Rgb& p) { return rgb_to_hsv(p); });
}

ImageRGB hsv_to_rgb(const ImageHSV& img) {
  return map_pixels<Rgb>(img, [](const Hsv& p) { return hsv_to_rgb(p); });
}

double srgb_to_linear(double v) {
  const double m = std::abs(v);
  const double lin = m <= 0.04045 ? m / 12.92 : std::pow((m + 0.055) / 1.055, 2.4);
  return std::copysign(lin, v);
}

double linear_to_srgb(double v) {
  const double m = std::abs(v);
  const double enc = m <= 0.0031308 ? 12.92 * m : 1.055 * std::pow(m, 1.0 / 2.4) - 0.055;
  return std::copysign(enc, v);
}

Lab rgb_to_lab(const Rgb& p) {
  const auto xyz = mul(kRgbToXyz, srgb_to_linear(p.r), srgb_to_linear(p.g), srgb_to_linear(p.b));
  const auto& w = white_xyz();
  const double fx = lab_f(xyz[0] / w[0]);
  const double fy = lab_f(xyz[1] / w[1]);
  const double fz = lab_f(xyz[2] / w[2]);
  return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Rgb lab_to_rgb(const Lab& p) {
  const double fy = (p.l + 16.0) / 116.0;
  const double fx = fy + p.a / 500.0;
  const double fz = fy - p.b / 200.0;
  const auto& w = white_xyz();
  const auto lin = mul(xyz_to_rgb(), lab_f_inverse(fx) * w[0], lab_f_inverse(fy) * w[1],
                       lab_f_inverse(fz) * w[2]);
  return {clamp01(linear_to_srgb(lin[0])), clamp01(linear_to_srgb(lin[1])),
          clamp01(linear_to_srgb(lin[2]))};
}

ImageLab rgb_to_lab(const ImageRGB& img) {
  return map_pixels<Lab>(img, [](const Rgb& p) { return rgb_to_lab(p); });
}

ImageRGB lab_to_rgb(const ImageLab& img) {
  return map_pixels<Rgb>(img, [](const Lab& p) { return lab_to_rgb(p); });
}

Matrix3 rgb_to_lab_jacobian(const Rgb& p) {
  const std::array<double, 3> d_lin = {srgb_derivative(p.r), srgb_derivative(p.g),
                                       srgb_derivative(p.b)};
  const auto xyz = mul(kRgbToXyz, srgb_to_linear(p.r), srgb_to_linear(p.g), srgb_to_linear(p.b));
  const auto& w = white_xyz();

  // df_k / dRGB_c for k in {x, y, z}.
  Matrix3 df{};
  for (int k = 0; k < 3; ++k) {
    const double dfk = lab_f_derivative(xyz[k] / w[k]) / w[k];
    for (int c = 0; c < 3; ++c) df[k][c] = dfk * kRgbToXyz[k][c] * d_lin[c];
  }
  Matrix3 j{};
  for (int c = 0; c < 3; ++c) {
    j[0][c] = 116.0 * df[1][c];
    j[1][c] = 500.0 * (df[0][c] - df[1][c]);
    j[2][c] = 200.0 * (df[1][c] - df[2][c]);
  }
  return j;
}

double delta_e(const Lab& p1, const Lab& p2) {
  const double dl = p1.l - p2.l;
  const double da = p1.a - p2.a;
  const double db = p1.b - p2.b;
  return std::sqrt(dl * dl + da * da + db * db);
}

}  // namespace lcc
