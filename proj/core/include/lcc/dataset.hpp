#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lcc/exif.hpp"
#include "lcc/image.hpp"

namespace lcc {

struct SamplePair {
  std::string id;
  ImageRGB input;
  ImageRGB gt;
  NormalizedCondition cond;
};

struct SkipEntry {
  std::string id;
  std::string reason;
};

struct Dataset {
  std::vector<SamplePair> pairs;  // sorted by id
  std::vector<SkipEntry> skipped;
};

/// Loads `<dir>/input/*` and `<dir>/gt/*` pairs matched by file stem. The
/// condition comes from `<stem>.exif.json` in input/ or in <dir>; absent
/// sidecars give a zero condition. Each image is resized bilinearly so its
/// longer edge is `long_edge` (0 keeps the original size). Stems present on
/// only one side are reported in `skipped`.
Dataset load_dataset(const std::filesystem::path& dir, int long_edge = 500);

struct Split {
  std::vector<SamplePair> train;
  std::vector<SamplePair> test;
};

/// First `train_count` pairs for training, the rest for testing.
Split split_dataset(std::vector<SamplePair> pairs, std::size_t train_count);

}  // namespace lcc
