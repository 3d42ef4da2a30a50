#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcc/dataset.hpp"
#include "lcc/model.hpp"
#include "lcc/palette.hpp"

namespace lcc {

struct TrainConfig {
  std::uint64_t seed = 6;
  double learning_rate = 1e-3;
  int epochs = 1;
  int batch_size = 32;
  double w_l1lab = 1.0;
  double w_hue = 1.0;
  int hue_bins = kDefaultHueBins;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int knots = kDefaultKnots;
  int hidden = kDefaultHidden;
  /// Optional penalty on decreasing stage-1 knots. Affects gradients only;
  /// it is not part of the logged total.
  double w_monotone = 0.0;
  /// Train stage 1 alone for `epochs`, freeze it, then stage 2 for `epochs`.
  bool stage_wise = false;

  /// Throws std::invalid_argument for negative weights, bad bin counts and
  /// non-positive sizes.
  void validate() const;
  nlohmann::json to_json() const;
};

struct LossBreakdown {
  double stage1 = 0.0;
  double l1lab = 0.0;
  double hue = 0.0;
  double total = 0.0;  // stage1 + w_l1lab * l1lab + w_hue * hue
};

struct EpochLog {
  int epoch = 0;
  LossBreakdown loss;
  double psnr_val = std::numeric_limits<double>::quiet_NaN();
};

struct TrainResult {
  EnhancerParams params;
  std::vector<EpochLog> history;
  int steps = 0;
};

/// Adam with bias correction on a flat parameter vector.
class Adam {
 public:
  Adam(std::size_t n, double lr, double beta1, double beta2, double epsilon);
  void step(std::span<double> params, std::span<const double> grad);
  int steps() const { return t_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  int t_ = 0;
  std::vector<double> m_, v_;
};

/// Losses of `params` on one pair.
LossBreakdown evaluate_pair(const SamplePair& pair, const HuePaletteMask& masks,
                            const EnhancerParams& params, const TrainConfig& config);
/// Mean losses over a set of pairs (masks built from each GT).
LossBreakdown evaluate(std::span<const SamplePair> data, const EnhancerParams& params,
                       const TrainConfig& config);
/// Mean PSNR of forward() against GT.
double mean_psnr(std::span<const SamplePair> data, const EnhancerParams& params);

/// Adam on stage1 + w_l1lab * l1lab + w_hue * hue, batch order drawn from
/// config.seed. `validation` (may be empty) feeds psnr_val in the history.
TrainResult train(std::span<const SamplePair> data, const TrainConfig& config,
                  std::span<const SamplePair> validation = {});

/// `epoch,stage1,l1lab,hue,total,psnr_val`, preceded by a `# seed=<n>` line.
void write_log_csv(std::ostream& out, const std::vector<EpochLog>& history, std::uint64_t seed);

struct BinSweepRow {
  int bins = 0;
  double psnr = 0.0;
};

/// Trains once per bin count and reports held-out PSNR.
std::vector<BinSweepRow> sweep_hue_bins(std::span<const SamplePair> train_set,
                                        std::span<const SamplePair> test_set,
                                        const TrainConfig& config, std::span<const int> bins);

}  // namespace lcc
