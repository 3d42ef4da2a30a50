#pragma once

#include <array>

#include "lcc/image.hpp"

namespace lcc {

using Matrix3 = std::array<std::array<double, 3>, 3>;

// BT.601-style luma/chroma transform with the coefficients exactly as
// printed (three decimals). No offsets: U and V are centred on zero.
Yuv rgb_to_yuv(const Rgb& p);
Rgb yuv_to_rgb_unclamped(const Yuv& p);
/// Inverse transform, clamped to [0, 1].
Rgb yuv_to_rgb(const Yuv& p);

/// Luma row of the YUV transform.
double luma(const Rgb& p);
/// Weights of luma() with respect to R, G, B.
inline constexpr std::array<double, 3> kLumaWeights = {0.299, 0.587, 0.114};

ImageYUV rgb_to_yuv(const ImageRGB& img);
ImageRGB yuv_to_rgb(const ImageYUV& img);
Plane luma(const ImageRGB& img);

/// Forward YUV matrix as doubles, row-major.
Matrix3 yuv_matrix();
/// Inverse of yuv_matrix(), from the exact integer adjugate.
Matrix3 yuv_inverse_matrix();

Hsv rgb_to_hsv(const Rgb& p);
Rgb hsv_to_rgb(const Hsv& p);
ImageHSV rgb_to_hsv(const ImageRGB& img);
ImageRGB hsv_to_rgb(const ImageHSV& img);
/// Hue in degrees [0, 360); 0 for achromatic pixels.
double hue_degrees(const Rgb& p);

// sRGB (IEC 61966-2-1 transfer, D65) <-> CIE Lab.
double srgb_to_linear(double v);
double linear_to_srgb(double v);
Lab rgb_to_lab(const Rgb& p);
/// Clamped to [0, 1].
Rgb lab_to_rgb(const Lab& p);
ImageLab rgb_to_lab(const ImageRGB& img);
ImageRGB lab_to_rgb(const ImageLab& img);

/// d(L, a, b) / d(R, G, B) at p. Rows are L, a, b; columns R, G, B.
Matrix3 rgb_to_lab_jacobian(const Rgb& p);

/// Euclidean distance in Lab (CIE76).
double delta_e(const Lab& p1, const Lab& p2);

}  // namespace lcc
