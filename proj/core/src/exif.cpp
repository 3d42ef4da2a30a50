#include "lcc/exif.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

namespace lcc {

namespace fs = std::filesystem;

NormalizedCondition normalize(const ExifVector& v) {
  return {{v.iso / 1000.0, v.exposure_time * 1000, v.fnumber, v.shutter_speed,
           v.focal_length / 10.0, v.bias_value}};
}

namespace {

struct FieldRef {
  const char* name;
  double ExifVector::*member;
  bool non_negative;
};

constexpr FieldRef kFields[] = {
    {"iso", &ExifVector::iso, true},
    {"exposure_time", &ExifVector::exposure_time, true},
    {"fnumber", &ExifVector::fnumber, true},
    {"shutter_speed", &ExifVector::shutter_speed, false},
    {"focal_length", &ExifVector::focal_length, true},
    {"bias_value", &ExifVector::bias_value, false},
};

void check_range(const FieldRef& f, double v) {
  if (!std::isfinite(v)) throw ExifParseError(std::string("field '") + f.name + "': not finite");
  if (f.non_negative && v < 0.0)
    throw ExifParseError(std::string("field '") + f.name + "': must be non-negative");
}

// TIFF 6.0 field types used by the six tags.
enum TiffType : std::uint16_t {
  kShort = 3,
  kLong = 4,
  kRational = 5,
  kSShort = 8,
  kSLong = 9,
  kSRational = 10,
};

struct TagRef {
  std::uint16_t tag;
  const char* name;
  double ExifVector::*member;
};

constexpr TagRef kTags[] = {
    {0x829A, "ExposureTime", &ExifVector::exposure_time},
    {0x829D, "FNumber", &ExifVector::fnumber},
    {0x8827, "ISOSpeedRatings", &ExifVector::iso},
    {0x9201, "ShutterSpeedValue", &ExifVector::shutter_speed},
    {0x9204, "ExposureBiasValue", &ExifVector::bias_value},
    {0x920A, "FocalLength", &ExifVector::focal_length},
};

constexpr std::uint16_t kExifIfdPointer = 0x8769;

class TiffReader {
 public:
  explicit TiffReader(std::span<const std::uint8_t> data) : data_(data) {
    if (data_.size() < 8) throw ExifParseError("EXIF: TIFF header truncated");
    if (data_[0] == 'I' && data_[1] == 'I') {
      little_ = true;
    } else if (data_[0] == 'M' && data_[1] == 'M') {
      little_ = false;
    } else {
      throw ExifParseError("EXIF: bad TIFF byte-order mark");
    }
    if (u16(2) != 42) throw ExifParseError("EXIF: bad TIFF magic");
  }

  std::uint32_t first_ifd() const { return u32(4); }

  std::uint16_t u16(std::size_t off) const {
    need(off, 2, "TIFF structure");
    return little_ ? static_cast<std::uint16_t>(data_[off] | (data_[off + 1] << 8))
                   : static_cast<std::uint16_t>((data_[off] << 8) | data_[off + 1]);
  }

  std::uint32_t u32(std::size_t off) const {
    need(off, 4, "TIFF structure");
    const std::uint32_t b0 = data_[off], b1 = data_[off + 1], b2 = data_[off + 2], b3 = data_[off + 3];
    return little_ ? (b0 | (b1 << 8) | (b2 << 16) | (b3 << 24))
                   : ((b0 << 24) | (b1 << 16) | (b2 << 8) | b3);
  }

  void need(std::size_t off, std::size_t len, const char* what) const {
    if (off > data_.size() || len > data_.size() - off)
      throw ExifParseError(std::string("EXIF: ") + what + ": offset out of range");
  }

  // First value of an IFD entry as a real number.
  double entry_value(std::size_t entry, const char* name) const {
    const std::uint16_t type = u16(entry + 2);
    const std::uint32_t count = u32(entry + 4);
    if (count == 0) return 0.0;
    std::size_t size;
    switch (type) {
      case kShort:
      case kSShort: size = 2; break;
      case kLong:
      case kSLong: size = 4; break;
      case kRational:
      case kSRational: size = 8; break;
      default:
        throw ExifParseError(std::string("EXIF: ") + name + ": unsupported field type " +
                             std::to_string(type));
    }
    const std::size_t off = size * count <= 4 ? entry + 8 : u32(entry + 8);
    need(off, size, name);
    switch (type) {
      case kShort: return u16(off);
      case kSShort: return static_cast<std::int16_t>(u16(off));
      case kLong: return u32(off);
      case kSLong: return static_cast<std::int32_t>(u32(off));
      case kRational: {
        const std::uint32_t num = u32(off), den = u32(off + 4);
        return den == 0 ? 0.0 : static_cast<double>(num) / den;
      }
      default: {
        const auto num = static_cast<std::int32_t>(u32(off));
        const auto den = static_cast<std::int32_t>(u32(off + 4));
        return den == 0 ? 0.0 : static_cast<double>(num) / den;
      }
    }
  }

  // Visits entries of the IFD at `off`; fn(tag, entry_offset).
  template <class Fn>
  void for_each_entry(std::uint32_t off, Fn&& fn) const {
    const std::uint16_t n = u16(off);
    need(off + 2, static_cast<std::size_t>(n) * 12, "IFD entries");
    for (std::uint16_t i = 0; i < n; ++i) {
      const std::size_t entry = off + 2 + static_cast<std::size_t>(i) * 12;
      fn(u16(entry), entry);
    }
  }

 private:
  std::span<const std::uint8_t> data_;
  bool little_ = true;
};

ExifVector parse_tiff(std::span<const std::uint8_t> tiff) {
  TiffReader reader(tiff);
  ExifVector out;
  std::optional<std::uint32_t> exif_ifd;

  auto visit = [&](std::uint16_t tag, std::size_t entry) {
    if (tag == kExifIfdPointer) {
      exif_ifd = reader.u32(entry + 8);
      return;
    }
    for (const TagRef& t : kTags) {
      if (t.tag == tag) out.*t.member = reader.entry_value(entry, t.name);
    }
  };
  reader.for_each_entry(reader.first_ifd(), visit);
  if (exif_ifd) reader.for_each_entry(*exif_ifd, visit);

  for (const FieldRef& f : kFields) {
    if (f.non_negative && out.*f.member < 0.0)
      throw ExifParseError(std::string("EXIF: ") + f.name + ": negative value");
  }
  return out;
}

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExifParseError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

ExifVector parse_exif_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ExifParseError(std::string("malformed EXIF JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ExifParseError("EXIF JSON: top level must be an object");
  ExifVector out;
  for (const FieldRef& f : kFields) {
    auto it = doc.find(f.name);
    if (it == doc.end() || it->is_null()) continue;
    if (!it->is_number())
      throw ExifParseError(std::string("field '") + f.name + "': expected a number");
    const double v = it->get<double>();
    check_range(f, v);
    out.*f.member = v;
  }
  return out;
}

ExifVector parse_exif_jpeg(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || bytes[0] != 0xFF || bytes[1] != 0xD8)
    throw ExifParseError("not a JPEG stream (missing SOI)");
  std::size_t pos = 2;
  while (pos + 4 <= bytes.size()) {
    if (bytes[pos] != 0xFF) throw ExifParseError("JPEG: expected marker at offset " + std::to_string(pos));
    const std::uint8_t marker = bytes[pos + 1];
    if (marker == 0xFF) {  // fill byte
      ++pos;
      continue;
    }
    if (marker == 0xD9 || marker == 0xDA) break;  // EOI / start of scan
    if (marker == 0x01 || (marker >= 0xD0 && marker <= 0xD7)) {
      pos += 2;
      continue;
    }
    const std::size_t len = (static_cast<std::size_t>(bytes[pos + 2]) << 8) | bytes[pos + 3];
    if (len < 2 || pos + 2 + len > bytes.size())
      throw ExifParseError("JPEG: segment length out of range");
    const auto payload = bytes.subspan(pos + 4, len - 2);
    static constexpr std::uint8_t kExifId[] = {'E', 'x', 'i', 'f', 0, 0};
    if (marker == 0xE1 && payload.size() >= 6 && std::equal(kExifId, kExifId + 6, payload.begin())) {
      return parse_tiff(payload.subspan(6));
    }
    pos += 2 + len;
  }
  return {};
}

ExifVector load_exif(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  const bool json = ext == ".json";
  if (!json && ext != ".jpg" && ext != ".jpeg")
    throw std::invalid_argument("load_exif: unsupported source " + path.string());
  const auto bytes = read_bytes(path);
  if (json) return parse_exif_json(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  return parse_exif_jpeg(bytes);
}

ConditionClusters kmeans_cluster(std::span<const NormalizedCondition> vectors, std::size_t k,
                                 std::uint64_t seed, const KMeansOptions& options) {
  std::vector<double> flat;
  flat.reserve(vectors.size() * kConditionSize);
  for (const auto& v : vectors) flat.insert(flat.end(), v.values.begin(), v.values.end());
  ConditionClusters out;
  out.raw = kmeans(flat, kConditionSize, k, seed, options);
  out.assignments = out.raw.assignments;
  for (std::size_t j = 0; j < out.raw.k(); ++j) {
    NormalizedCondition c;
    const auto row = out.raw.centroid(j);
    std::copy(row.begin(), row.end(), c.values.begin());
    out.centroids.push_back(c);
  }
  return out;
}

fs::path sidecar_path(const fs::path& image) {
  return image.parent_path() / (image.stem().string() + ".exif.json");
}

}  // namespace lcc
