#include "lcc/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <vector>

namespace lcc {

namespace fs = std::filesystem;

namespace {

std::string lower_ext(const fs::path& p) {
  std::string e = p.extension().string();
  std::transform(e.begin(), e.end(), e.begin(), [](unsigned char c) { return std::tolower(c); });
  return e;
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const fs::path& path, const char* mode) {
  FilePtr f(std::fopen(path.string().c_str(), mode));
  if (!f) throw IoError("cannot open " + path.string());
  return f;
}

void png_error_handler(png_structp png, png_const_charp msg) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  if (what) *what = msg;
  png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

ImageRGB read_png(const fs::path& path) {
  FilePtr file = open_file(path, "rb");
  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_error_handler,
                                           png_warning_handler);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  std::vector<png_byte> buffer;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("bad PNG " + path.string() + ": " + error);
  }
  png_init_io(png, file.get());
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (bit_depth == 16) png_set_swap(png);  // host little-endian words
  png_read_update_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  const int depth = png_get_bit_depth(png, info);
  const int channels = png_get_channels(png, info);
  buffer.resize(rowbytes * height);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = buffer.data() + y * rowbytes;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  if (channels != 3) throw IoError("unsupported PNG channel layout in " + path.string());
  ImageRGB img(static_cast<int>(width), static_cast<int>(height));
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      double v[3];
      for (int c = 0; c < 3; ++c) {
        if (depth == 16) {
          std::uint16_t s;
          std::memcpy(&s, rows[y] + (x * 3 + c) * 2, 2);
          v[c] = s / 65535.0;
        } else {
          v[c] = rows[y][x * 3 + c] / 255.0;
        }
      }
      img.at(static_cast<int>(x), static_cast<int>(y)) = {v[0], v[1], v[2]};
    }
  }
  return img;
}

void write_png(const fs::path& path, const ImageRGB& img, BitDepth depth) {
  FilePtr file = open_file(path, "wb");
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, png_error_handler,
                                            png_warning_handler);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  const int bits = static_cast<int>(depth);
  const std::size_t sample_bytes = bits / 8;
  const std::size_t rowbytes = static_cast<std::size_t>(img.width()) * 3 * sample_bytes;
  std::vector<png_byte> buffer(rowbytes * img.height());
  const unsigned max_value = depth == BitDepth::k16 ? 65535u : 255u;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Rgb& p = img.at(x, y);
      const double v[3] = {p.r, p.g, p.b};
      for (int c = 0; c < 3; ++c) {
        const unsigned q = quantize(v[c], max_value);
        png_byte* dst = buffer.data() + y * rowbytes + (static_cast<std::size_t>(x) * 3 + c) * sample_bytes;
        if (depth == BitDepth::k16) {
          dst[0] = static_cast<png_byte>(q >> 8);
          dst[1] = static_cast<png_byte>(q & 0xff);
        } else {
          dst[0] = static_cast<png_byte>(q);
        }
      }
    }
  }
  std::vector<png_bytep> rows(img.height());
  for (int y = 0; y < img.height(); ++y) rows[y] = buffer.data() + y * rowbytes;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed for " + path.string() + ": " + error);
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, img.width(), img.height(), bits, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// Netpbm header: magic, width, height, maxval, separated by whitespace with
// '#' comments, then exactly one whitespace byte before the raster.
struct PnmHeader {
  std::string magic;
  int width = 0;
  int height = 0;
  unsigned max_value = 0;
};

PnmHeader read_pnm_header(std::istream& in, const fs::path& path) {
  auto next_token = [&]() {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
      if (ch == '#') {
        while ((ch = in.get()) != EOF && ch != '\n') {
        }
        continue;
      }
      if (std::isspace(ch)) {
        if (!tok.empty()) break;
        continue;
      }
      tok.push_back(static_cast<char>(ch));
    }
    if (tok.empty()) throw IoError("truncated PNM header in " + path.string());
    return tok;
  };
  PnmHeader h;
  h.magic = next_token();
  try {
    h.width = std::stoi(next_token());
    h.height = std::stoi(next_token());
    h.max_value = static_cast<unsigned>(std::stoul(next_token()));
  } catch (const std::logic_error&) {
    throw IoError("malformed PNM header in " + path.string());
  }
  if (h.width <= 0 || h.height <= 0 || h.max_value == 0 || h.max_value > 65535)
    throw IoError("invalid PNM dimensions or maxval in " + path.string());
  return h;
}

std::vector<unsigned> read_pnm_samples(std::istream& in, const PnmHeader& h, int channels,
                                       const fs::path& path) {
  const std::size_t count = static_cast<std::size_t>(h.width) * h.height * channels;
  const std::size_t bytes_per = h.max_value > 255 ? 2 : 1;
  std::vector<unsigned char> raw(count * bytes_per);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size())
    throw IoError("truncated PNM raster in " + path.string());
  std::vector<unsigned> samples(count);
  for (std::size_t i = 0; i < count; ++i) {
    samples[i] = bytes_per == 2 ? (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1] : raw[i];
  }
  return samples;
}

void write_pnm(const fs::path& path, const char* magic, int width, int height, unsigned max_value,
               const std::vector<unsigned>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string());
  out << magic << '\n' << width << ' ' << height << '\n' << max_value << '\n';
  std::vector<unsigned char> raw;
  raw.reserve(samples.size() * 2);
  for (unsigned s : samples) {
    if (max_value > 255) raw.push_back(static_cast<unsigned char>(s >> 8));
    raw.push_back(static_cast<unsigned char>(s & 0xff));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

ImageRGB read_pnm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const PnmHeader h = read_pnm_header(in, path);
  int channels;
  if (h.magic == "P6") {
    channels = 3;
  } else if (h.magic == "P5") {
    channels = 1;
  } else {
    throw IoError("unsupported PNM magic '" + h.magic + "' in " + path.string());
  }
  const auto samples = read_pnm_samples(in, h, channels, path);
  ImageRGB img(h.width, h.height);
  const double max_value = h.max_value;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (channels == 3) {
      img[i] = {samples[3 * i] / max_value, samples[3 * i + 1] / max_value, samples[3 * i + 2] / max_value};
    } else {
      const double v = samples[i] / max_value;
      img[i] = {v, v, v};
    }
  }
  return img;
}

}  // namespace

unsigned quantize(double v, unsigned max_value) {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<unsigned>(std::floor(c * max_value + 0.5));
}

bool is_image_file(const fs::path& path) {
  const std::string e = lower_ext(path);
  return e == ".png" || e == ".ppm" || e == ".pgm" || e == ".pnm";
}

ImageRGB read_image(const fs::path& path) {
  const std::string e = lower_ext(path);
  if (e == ".png") return read_png(path);
  if (e == ".ppm" || e == ".pgm" || e == ".pnm") return read_pnm(path);
  throw IoError("unsupported image format: " + path.string());
}

void write_image(const fs::path& path, const ImageRGB& img, BitDepth depth) {
  const std::string e = lower_ext(path);
  if (e == ".png") {
    write_png(path, img, depth);
    return;
  }
  if (e == ".ppm" || e == ".pnm") {
    const unsigned max_value = depth == BitDepth::k16 ? 65535u : 255u;
    std::vector<unsigned> samples;
    samples.reserve(img.size() * 3);
    for (const Rgb& p : img.pixels()) {
      samples.push_back(quantize(p.r, max_value));
      samples.push_back(quantize(p.g, max_value));
      samples.push_back(quantize(p.b, max_value));
    }
    write_pnm(path, "P6", img.width(), img.height(), max_value, samples);
    return;
  }
  throw IoError("unsupported output format: " + path.string());
}

void write_pgm(const fs::path& path, const Plane& plane, BitDepth depth) {
  const unsigned max_value = depth == BitDepth::k16 ? 65535u : 255u;
  std::vector<unsigned> samples;
  samples.reserve(plane.size());
  for (double v : plane.values()) samples.push_back(quantize(v, max_value));
  write_pnm(path, "P5", plane.width(), plane.height(), max_value, samples);
}

Plane read_pgm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const PnmHeader h = read_pnm_header(in, path);
  if (h.magic != "P5") throw IoError("not a binary PGM: " + path.string());
  const auto samples = read_pnm_samples(in, h, 1, path);
  Plane plane(h.width, h.height);
  for (std::size_t i = 0; i < samples.size(); ++i)
    plane[i] = static_cast<double>(samples[i]) / h.max_value;
  return plane;
}

}  // namespace lcc
