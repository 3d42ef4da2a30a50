#include "lcc/params_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "lcc/image_io.hpp"

namespace lcc {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'L', 'C', 'C', '1'};

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(bits >> (8 * i)));
}

std::uint64_t get_le(const std::vector<unsigned char>& in, std::size_t off, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[off + i]) << (8 * i);
  return v;
}

nlohmann::json branch_json(const ConditionBranch& b) {
  return {{"hidden", b.hidden}, {"outputs", b.outputs}, {"w1", b.w1},
          {"b1", b.b1},         {"w2", b.w2},           {"b2", b.b2}};
}

ConditionBranch branch_from_json(const nlohmann::json& j) {
  ConditionBranch b;
  b.hidden = j.at("hidden").get<int>();
  b.outputs = j.at("outputs").get<int>();
  b.w1 = j.at("w1").get<std::vector<double>>();
  b.b1 = j.at("b1").get<std::vector<double>>();
  b.w2 = j.at("w2").get<std::vector<double>>();
  b.b2 = j.at("b2").get<std::vector<double>>();
  if (b.w1.size() != static_cast<std::size_t>(b.hidden) * kConditionSize ||
      b.b1.size() != static_cast<std::size_t>(b.hidden) ||
      b.w2.size() != static_cast<std::size_t>(b.outputs) * b.hidden ||
      b.b2.size() != static_cast<std::size_t>(b.outputs))
    throw IoError("params JSON: branch arrays do not match declared sizes");
  return b;
}

}  // namespace

std::vector<unsigned char> encode_params(const EnhancerParams& p) {
  const auto flat = p.flatten();
  std::vector<unsigned char> out(std::begin(kMagic), std::end(kMagic));
  out.reserve(12 + flat.size() * 8);
  put_u32(out, static_cast<std::uint32_t>(p.knot_count()));
  put_u32(out, static_cast<std::uint32_t>(p.hidden()));
  for (double v : flat) put_f64(out, v);
  return out;
}

EnhancerParams decode_params(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw IoError("params: missing LCC1 header");
  const auto knots = static_cast<int>(get_le(bytes, 4, 4));
  const auto hidden = static_cast<int>(get_le(bytes, 8, 4));
  if (knots < 2 || knots > 4096 || hidden < 1 || hidden > 4096)
    throw IoError("params: implausible knot count or hidden size");
  EnhancerParams p = EnhancerParams::identity(knots, hidden);
  const std::size_t n = p.parameter_count();
  if (bytes.size() != 12 + n * 8)
    throw IoError("params: expected " + std::to_string(12 + n * 8) + " bytes, got " +
                  std::to_string(bytes.size()));
  std::vector<double> flat(n);
  for (std::size_t i = 0; i < n; ++i) flat[i] = std::bit_cast<double>(get_le(bytes, 12 + 8 * i, 8));
  p.assign(flat);
  return p;
}

void save_params(const fs::path& path, const EnhancerParams& p) {
  const auto bytes = encode_params(p);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

EnhancerParams load_params(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (path.extension() == ".json") {
    try {
      return params_from_json(nlohmann::json::parse(bytes.begin(), bytes.end()));
    } catch (const nlohmann::json::exception& e) {
      throw IoError("params JSON " + path.string() + ": " + e.what());
    }
  }
  return decode_params(bytes);
}

nlohmann::json params_to_json(const EnhancerParams& p, const nlohmann::json& extra) {
  nlohmann::json doc;
  doc["format"] = "LCC1";
  doc["knots"] = p.knot_count();
  doc["hidden"] = p.hidden();
  doc["parameter_count"] = p.parameter_count();
  auto knots = [](const ToneCurve& c) { return std::vector<double>(c.knots().begin(), c.knots().end()); };
  doc["stage1"] = {{"curve", knots(p.stage1_curve)}, {"branch", branch_json(p.stage1_branch)}};
  nlohmann::json curves = nlohmann::json::array();
  for (const ToneCurve& c : p.stage2_curves) curves.push_back(knots(c));
  nlohmann::json spatial = nlohmann::json::array();
  for (const SpatialTerm& s : p.spatial) spatial.push_back({s.a, s.b, s.c, s.d});
  doc["stage2"] = {{"curves", curves}, {"spatial", spatial}, {"branch", branch_json(p.stage2_branch)}};
  if (extra.is_object()) doc.update(extra);
  return doc;
}

EnhancerParams params_from_json(const nlohmann::json& doc) {
  EnhancerParams p;
  p.stage1_curve = ToneCurve(doc.at("stage1").at("curve").get<std::vector<double>>());
  p.stage1_branch = branch_from_json(doc.at("stage1").at("branch"));
  const auto& s2 = doc.at("stage2");
  const auto& curves = s2.at("curves");
  const auto& spatial = s2.at("spatial");
  if (curves.size() != kChannelPairs || spatial.size() != 3)
    throw IoError("params JSON: stage2 expects 9 curves and 3 spatial terms");
  for (int k = 0; k < kChannelPairs; ++k) {
    p.stage2_curves[k] = ToneCurve(curves[k].get<std::vector<double>>());
    if (p.stage2_curves[k].knot_count() != p.stage1_curve.knot_count())
      throw IoError("params JSON: curve knot counts differ");
  }
  for (int c = 0; c < 3; ++c) {
    const auto v = spatial[c].get<std::vector<double>>();
    if (v.size() != 4) throw IoError("params JSON: spatial term needs 4 coefficients");
    p.spatial[c] = {v[0], v[1], v[2], v[3]};
  }
  p.stage2_branch = branch_from_json(s2.at("branch"));
  if (p.stage1_branch.outputs != p.knot_count() || p.stage2_branch.outputs != kChannelPairs ||
      p.stage1_branch.hidden != p.stage2_branch.hidden)
    throw IoError("params JSON: branch sizes inconsistent with curves");
  return p;
}

void save_checkpoint(const fs::path& path, const EnhancerParams& p, const nlohmann::json& extra) {
  save_params(path, p);
  fs::path mirror = path;
  mirror += ".json";
  std::ofstream out(mirror);
  if (!out) throw IoError("cannot open " + mirror.string());
  out << params_to_json(p, extra).dump(2) << '\n';
}

}  // namespace lcc
