#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lcc/color.hpp"
#include "lcc/dataset.hpp"
#include "lcc/exif.hpp"
#include "lcc/image_io.hpp"
#include "lcc/luminance.hpp"
#include "lcc/metrics.hpp"
#include "lcc/model.hpp"
#include "lcc/palette.hpp"
#include "lcc/params_io.hpp"
#include "lcc/train.hpp"

namespace fs = std::filesystem;

namespace lcc::cli {

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.push_back('0');
  return s;
}

namespace {

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ConvertArgs {
  std::string to;
  std::string input;
  std::string out;
};

struct GainmapArgs {
  std::string target, source, out;
};

struct HueLossArgs {
  int bins = kDefaultHueBins;
  std::string output, gt;
};

struct PaletteArgs {
  int k = kDefaultPaletteSize;
  std::uint64_t seed = 6;
  std::string image;
};

struct ClusterArgs {
  std::size_t k = 30;
  std::uint64_t seed = 6;
  std::string dir;
};

struct TrainArgs {
  TrainConfig config;
  std::string data;
  std::string out = "lcc_params.bin";
  std::string log = "train_log.csv";
  int long_edge = 500;
  double holdout = 0.1;
};

struct InferArgs {
  std::string params, exif, input, output;
  bool sixteen_bit = false;
};

struct MetricsArgs {
  std::string a, b;
};

struct AnalyzeArgs {
  int k = kDefaultPaletteSize;
  std::uint64_t seed = 6;
  std::string dir;
};

int run_convert(const ConvertArgs& a, std::ostream& out) {
  const ImageRGB img = read_image(a.input);
  ImageRGB back;
  if (a.to == "yuv") {
    back = yuv_to_rgb(rgb_to_yuv(img));
  } else if (a.to == "hsv") {
    back = hsv_to_rgb(rgb_to_hsv(img));
  } else {
    back = lab_to_rgb(rgb_to_lab(img));
  }
  out << "space=" << a.to << " max_abs_error=" << full(max_abs_difference(img, back)) << '\n';
  if (!a.out.empty()) write_image(a.out, back);
  return kExitOk;
}

int run_gainmap(const GainmapArgs& a, std::ostream& out) {
  const ImageRGB target = read_image(a.target);
  const ImageRGB source = read_image(a.source);
  const GainMap gain = compute_gainmap(luma(target), luma(source));
  const Plane& g = gain.plane();
  const double max_gain = g.size() ? *std::max_element(g.values().begin(), g.values().end()) : 0.0;
  const double scale = max_gain > 0.0 ? max_gain : 1.0;
  Plane scaled(g.width(), g.height());
  for (std::size_t i = 0; i < g.size(); ++i) scaled[i] = g[i] / scale;
  write_pgm(a.out, scaled, BitDepth::k16);
  const fs::path sidecar = a.out + ".max.txt";
  std::ofstream side(sidecar);
  side << "max=" << full(scale) << '\n';
  if (!side) throw IoError("cannot write " + sidecar.string());
  out << "max=" << full(scale) << '\n';
  return kExitOk;
}

int run_hue_loss(const HueLossArgs& a, std::ostream& out) {
  check_hue_bins(a.bins);
  const ImageRGB output = read_image(a.output);
  const ImageRGB gt = read_image(a.gt);
  if (!output.same_shape(gt)) throw std::invalid_argument("hue-loss: images differ in size");
  const HuePaletteMask masks = build_masks(gt, a.bins);
  const HueLossTerms terms = hue_palette_loss_terms(output, gt, masks);
  out << "bin\tcount\tloss\n";
  for (int j = 0; j < a.bins; ++j) out << j << '\t' << masks.count(j) << '\t' << full(terms.per_bin[j]) << '\n';
  out << "total\t" << gt.size() << '\t' << full(terms.total) << '\n';
  return kExitOk;
}

int run_palette(const PaletteArgs& a, std::ostream& out) {
  const PaletteColors p = major_colors(read_image(a.image), a.k, a.seed);
  out << "rank\tL\ta\tb\tweight\n";
  for (std::size_t i = 0; i < p.colors.size(); ++i) {
    const PaletteColor& c = p.colors[i];
    out << i << '\t' << full(c.lab.l) << '\t' << full(c.lab.a) << '\t' << full(c.lab.b) << '\t'
        << full(c.weight) << '\n';
  }
  return kExitOk;
}

bool is_exif_source(const fs::path& p) {
  const std::string name = p.filename().string();
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return name.ends_with(".exif.json") || ext == ".jpg" || ext == ".jpeg";
}

int run_cluster(const ClusterArgs& a, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(a.dir)) throw IoError("cluster-exif: not a directory: " + a.dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir))
    if (entry.is_regular_file() && is_exif_source(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw IoError("cluster-exif: no .exif.json or .jpg files in " + a.dir);

  std::vector<NormalizedCondition> conds;
  conds.reserve(files.size());
  for (const fs::path& f : files) conds.push_back(normalize(load_exif(f)));
  if (a.k > conds.size())
    throw std::invalid_argument("cluster-exif: k=" + std::to_string(a.k) + " exceeds " +
                                std::to_string(conds.size()) + " files");
  const ConditionClusters c = kmeans_cluster(conds, a.k, a.seed);
  out << "filename,cluster\n";
  for (std::size_t i = 0; i < files.size(); ++i) out << files[i].filename().string() << ',' << c.assignments[i] << '\n';
  err << "inertia=" << full(c.raw.inertia) << " iterations=" << c.raw.iterations << '\n';
  return kExitOk;
}

int run_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
  a.config.validate();
  if (a.holdout < 0.0 || a.holdout >= 1.0) throw std::invalid_argument("train: --holdout must lie in [0, 1)");
  Dataset ds = load_dataset(a.data, a.long_edge);
  for (const SkipEntry& s : ds.skipped) err << "skipped " << s.id << ": " << s.reason << '\n';
  const std::size_t n = ds.pairs.size();
  if (n == 0) throw IoError("train: no usable pairs in " + a.data);
  const auto held = static_cast<std::size_t>(std::floor(static_cast<double>(n) * a.holdout));
  const Split split = split_dataset(std::move(ds.pairs), n - held);
  err << "pairs: train=" << split.train.size() << " validation=" << split.test.size() << '\n';

  const TrainResult r = train(split.train, a.config, split.test);
  nlohmann::json extra;
  extra["seed"] = a.config.seed;
  extra["config"] = a.config.to_json();
  save_checkpoint(a.out, r.params, extra);
  std::ofstream log(a.log);
  write_log_csv(log, r.history, a.config.seed);
  if (!log) throw IoError("cannot write " + a.log);

  out << "steps=" << r.steps;
  if (!r.history.empty()) {
    const EpochLog& last = r.history.back();
    out << " total=" << full(last.loss.total) << " psnr_val=" << format_real(last.psnr_val);
  }
  out << " params=" << a.out << '\n';
  return kExitOk;
}

int run_infer(const InferArgs& a, std::ostream& out) {
  const EnhancerParams p = load_params(a.params);
  NormalizedCondition cond;
  if (!a.exif.empty()) cond = normalize(load_exif(a.exif));
  const ImageRGB img = read_image(a.input);
  write_image(a.output, forward(img, cond, p), a.sixteen_bit ? BitDepth::k16 : BitDepth::k8);
  out << "wrote " << a.output << '\n';
  return kExitOk;
}

int run_metrics(const MetricsArgs& a, std::ostream& out) {
  const ImageRGB x = read_image(a.a);
  const ImageRGB y = read_image(a.b);
  out << "psnr=" << format_real(psnr(x, y)) << " ssim=" << format_real(ssim(x, y)) << '\n';
  return kExitOk;
}

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
  if (!fs::is_directory(a.dir)) throw IoError("analyze-ab: not a directory: " + a.dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir))
    if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  out << "filename,rank,L,a,b,weight\n";
  for (const fs::path& f : files) {
    const PaletteColors p = major_colors(read_image(f), a.k, a.seed);
    for (std::size_t i = 0; i < p.colors.size(); ++i) {
      const PaletteColor& c = p.colors[i];
      out << f.filename().string() << ',' << i << ',' << full(c.lab.l) << ',' << full(c.lab.a) << ','
          << full(c.lab.b) << ',' << full(c.weight) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-light enhancement with shooting-condition priors", "lcc"};
  app.set_version_flag("--version", std::string("lcc ") + LCC_VERSION_STRING);
  app.require_subcommand(1);

  ConvertArgs convert;
  auto* c_convert = app.add_subcommand("convert", "Round-trip an image through a colour space");
  c_convert->add_option("--to", convert.to, "yuv, hsv or lab")->required()->check(CLI::IsMember({"yuv", "hsv", "lab"}));
  c_convert->add_option("--out", convert.out, "Write the round-tripped image");
  c_convert->add_option("input", convert.input)->required();

  GainmapArgs gainmap;
  auto* c_gain = app.add_subcommand("gainmap", "Write Y(target) / Y(source) as a 16-bit PGM");
  c_gain->add_option("--target", gainmap.target)->required();
  c_gain->add_option("--source", gainmap.source)->required();
  c_gain->add_option("--out", gainmap.out)->required();

  HueLossArgs hue;
  auto* c_hue = app.add_subcommand("hue-loss", "Per-bin hue palette loss as TSV");
  c_hue->add_option("--bins", hue.bins)->capture_default_str();
  c_hue->add_option("output", hue.output)->required();
  c_hue->add_option("gt", hue.gt)->required();

  PaletteArgs palette;
  auto* c_palette = app.add_subcommand("palette", "Major Lab colours of an image");
  c_palette->add_option("--k", palette.k)->capture_default_str();
  c_palette->add_option("--seed", palette.seed)->capture_default_str();
  c_palette->add_option("image", palette.image)->required();

  ClusterArgs cluster;
  auto* c_cluster = app.add_subcommand("cluster-exif", "k-means over shooting conditions");
  c_cluster->add_option("--k", cluster.k)->capture_default_str();
  c_cluster->add_option("--seed", cluster.seed)->capture_default_str();
  c_cluster->add_option("dir", cluster.dir)->required();

  TrainArgs tr;
  auto* c_train = app.add_subcommand("train", "Train the enhancer on <dir>/input and <dir>/gt");
  c_train->add_option("--data", tr.data)->required();
  c_train->add_option("--epochs", tr.config.epochs)->capture_default_str();
  c_train->add_option("--seed", tr.config.seed)->capture_default_str();
  c_train->add_option("--bins", tr.config.hue_bins)->capture_default_str();
  c_train->add_option("--lr", tr.config.learning_rate)->capture_default_str();
  c_train->add_option("--batch", tr.config.batch_size)->capture_default_str();
  c_train->add_option("--w-l1lab", tr.config.w_l1lab)->capture_default_str();
  c_train->add_option("--w-hue", tr.config.w_hue)->capture_default_str();
  c_train->add_option("--w-monotone", tr.config.w_monotone)->capture_default_str();
  c_train->add_option("--knots", tr.config.knots)->capture_default_str();
  c_train->add_option("--hidden", tr.config.hidden)->capture_default_str();
  c_train->add_flag("--stage-wise", tr.config.stage_wise, "Stage 1 first, then stage 2 with stage 1 frozen");
  c_train->add_option("--long-edge", tr.long_edge, "0 keeps the original size")->capture_default_str();
  c_train->add_option("--holdout", tr.holdout, "Fraction of pairs held out for psnr_val")->capture_default_str();
  c_train->add_option("--out", tr.out)->capture_default_str();
  c_train->add_option("--log", tr.log)->capture_default_str();

  InferArgs infer;
  auto* c_infer = app.add_subcommand("infer", "Enhance one image");
  c_infer->add_option("--params", infer.params)->required();
  c_infer->add_option("--exif", infer.exif, "JSON sidecar or JPEG; zero condition when omitted");
  c_infer->add_flag("--16", infer.sixteen_bit, "Write 16-bit output");
  c_infer->add_option("input", infer.input)->required();
  c_infer->add_option("output", infer.output)->required();

  MetricsArgs metrics;
  auto* c_metrics = app.add_subcommand("metrics", "PSNR and SSIM between two images");
  c_metrics->add_option("a", metrics.a)->required();
  c_metrics->add_option("b", metrics.b)->required();

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze-ab", "Six major Lab colours per image as CSV");
  c_analyze->add_option("--k", analyze.k)->capture_default_str();
  c_analyze->add_option("--seed", analyze.seed)->capture_default_str();
  c_analyze->add_option("dir", analyze.dir)->required();

  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "lcc" : args[0].c_str());
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "lcc: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (c_convert->parsed()) return run_convert(convert, out);
    if (c_gain->parsed()) return run_gainmap(gainmap, out);
    if (c_hue->parsed()) return run_hue_loss(hue, out);
    if (c_palette->parsed()) return run_palette(palette, out);
    if (c_cluster->parsed()) return run_cluster(cluster, out, err);
    if (c_train->parsed()) return run_train(tr, out, err);
    if (c_infer->parsed()) return run_infer(infer, out);
    if (c_metrics->parsed()) return run_metrics(metrics, out);
    if (c_analyze->parsed()) return run_analyze(analyze, out);
  } catch (const std::invalid_argument& e) {
    err << "lcc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lcc: " << e.what() << '\n';
    return kExitRuntime;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lcc::cli
