#include "lcc/dataset.hpp"

#include <map>
#include <stdexcept>

#include "lcc/image_io.hpp"
#include "lcc/resize.hpp"

namespace lcc {

namespace fs = std::filesystem;

namespace {

std::map<std::string, fs::path> images_by_stem(const fs::path& dir) {
  std::map<std::string, fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path()))
      out.emplace(entry.path().stem().string(), entry.path());
  }
  return out;
}

NormalizedCondition condition_for(const fs::path& dir, const fs::path& input) {
  for (const fs::path& candidate : {sidecar_path(input), dir / (input.stem().string() + ".exif.json")}) {
    if (fs::exists(candidate)) return normalize(load_exif(candidate));
  }
  return {};
}

ImageRGB load_resized(const fs::path& path, int long_edge) {
  ImageRGB img = read_image(path);
  return long_edge > 0 ? resize_long_edge(img, long_edge) : img;
}

}  // namespace

Dataset load_dataset(const fs::path& dir, int long_edge) {
  if (long_edge < 0) throw std::invalid_argument("load_dataset: long_edge must be >= 0");
  if (!fs::is_directory(dir)) throw IoError("load_dataset: not a directory: " + dir.string());
  const auto inputs = images_by_stem(dir / "input");
  const auto gts = images_by_stem(dir / "gt");
  Dataset ds;
  for (const auto& [stem, path] : inputs) {
    auto it = gts.find(stem);
    if (it == gts.end()) {
      ds.skipped.push_back({stem, "no ground truth in gt/"});
      continue;
    }
    SamplePair pair;
    pair.id = stem;
    pair.input = load_resized(path, long_edge);
    pair.gt = load_resized(it->second, long_edge);
    if (!pair.input.same_shape(pair.gt)) {
      ds.skipped.push_back({stem, "input and gt sizes differ"});
      continue;
    }
    pair.cond = condition_for(dir, path);
    ds.pairs.push_back(std::move(pair));
  }
  for (const auto& [stem, path] : gts) {
    if (!inputs.contains(stem)) ds.skipped.push_back({stem, "no input in input/"});
  }
  return ds;
}

Split split_dataset(std::vector<SamplePair> pairs, std::size_t train_count) {
  if (train_count > pairs.size())
    throw std::invalid_argument("split_dataset: train count exceeds " + std::to_string(pairs.size()) + " pairs");
  Split s;
  const std::size_t n = train_count;
  s.train.assign(std::make_move_iterator(pairs.begin()), std::make_move_iterator(pairs.begin() + n));
  s.test.assign(std::make_move_iterator(pairs.begin() + n), std::make_move_iterator(pairs.end()));
  return s;
}

}  // namespace lcc
