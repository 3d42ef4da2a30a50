// Held-out PSNR as a function of the hue bin count.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "lcc/dataset.hpp"
#include "lcc/train.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sweep the hue bin count and report held-out PSNR", "lcc_bin_sweep"};
  std::string data;
  lcc::TrainConfig config;
  std::vector<int> bins{1, 5, 10, 20};
  int long_edge = 500;
  double holdout = 0.1;
  app.add_option("--data", data)->required();
  app.add_option("--epochs", config.epochs)->capture_default_str();
  app.add_option("--seed", config.seed)->capture_default_str();
  app.add_option("--lr", config.learning_rate)->capture_default_str();
  app.add_option("--batch", config.batch_size)->capture_default_str();
  app.add_option("--bins", bins)->capture_default_str();
  app.add_option("--long-edge", long_edge)->capture_default_str();
  app.add_option("--holdout", holdout)->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    lcc::Dataset ds = lcc::load_dataset(data, long_edge);
    const std::size_t n = ds.pairs.size();
    const auto held = static_cast<std::size_t>(std::floor(static_cast<double>(n) * holdout));
    const lcc::Split split = lcc::split_dataset(std::move(ds.pairs), n - held);
    std::cout << "bins\tpsnr\n";
    for (const lcc::BinSweepRow& row : lcc::sweep_hue_bins(split.train, split.test, config, bins))
      std::printf("%d\t%.4f\n", row.bins, row.psnr);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
