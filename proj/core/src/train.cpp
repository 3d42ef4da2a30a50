#include "lcc/train.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "lcc/color.hpp"
#include "lcc/losses.hpp"
#include "lcc/metrics.hpp"

namespace lcc {

void TrainConfig::validate() const {
  if (learning_rate <= 0.0) throw std::invalid_argument("train: learning rate must be > 0");
  if (epochs < 0) throw std::invalid_argument("train: epochs must be >= 0");
  if (batch_size < 1) throw std::invalid_argument("train: batch size must be >= 1");
  if (w_l1lab < 0.0 || w_hue < 0.0 || w_monotone < 0.0)
    throw std::invalid_argument("train: loss weights must be >= 0");
  if (hue_bins < 1 || 360 % hue_bins != 0)
    throw std::invalid_argument("train: hue bins must divide 360");
  if (knots < 2 || hidden < 1) throw std::invalid_argument("train: knots >= 2 and hidden >= 1 required");
}

nlohmann::json TrainConfig::to_json() const {
  return {{"seed", seed},         {"learning_rate", learning_rate}, {"epochs", epochs},
          {"batch_size", batch_size}, {"w_l1lab", w_l1lab},        {"w_hue", w_hue},
          {"hue_bins", hue_bins}, {"beta1", beta1},                 {"beta2", beta2},
          {"adam_epsilon", adam_epsilon}, {"knots", knots},         {"hidden", hidden},
          {"w_monotone", w_monotone}, {"stage_wise", stage_wise}};
}

Adam::Adam(std::size_t n, double lr, double beta1, double beta2, double epsilon)
    : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(epsilon), m_(n, 0.0), v_(n, 0.0) {}

void Adam::step(std::span<double> params, std::span<const double> grad) {
  if (params.size() != m_.size() || grad.size() != m_.size())
    throw std::invalid_argument("Adam: size mismatch");
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, t_);
  const double c2 = 1.0 - std::pow(beta2_, t_);
  for (std::size_t i = 0; i < params.size(); ++i) {
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
    const double m_hat = m_[i] / c1;
    const double v_hat = v_[i] / c2;
    params[i] -= lr_ * m_hat / (std::sqrt(v_hat) + eps_);
  }
}

namespace {

enum class Phase { kJoint, kStage1, kStage2 };

// Per-pair constants reused every step.
struct Target {
  const SamplePair* pair;
  HuePaletteMask masks;
  ImageLab gt_lab;
};

std::vector<Target> make_targets(std::span<const SamplePair> data, int bins) {
  std::vector<Target> t;
  t.reserve(data.size());
  for (const SamplePair& p : data) {
    if (!p.input.same_shape(p.gt)) throw std::invalid_argument("train: pair '" + p.id + "' has mismatched sizes");
    t.push_back({&p, build_masks(p.gt, bins), rgb_to_lab(p.gt)});
  }
  return t;
}

LossBreakdown losses_for(const Target& t, const ForwardTrace& trace, const TrainConfig& c) {
  LossBreakdown l;
  l.stage1 = stage1_loss(trace.bright, t.pair->gt);
  l.l1lab = lab_l1_loss(trace.output, t.gt_lab);
  l.hue = hue_palette_loss(trace.output, t.pair->gt, t.masks);
  l.total = l.stage1 + c.w_l1lab * l.l1lab + c.w_hue * l.hue;
  return l;
}

// Loss and flat gradient for one pair under the given phase.
LossBreakdown pair_gradient(const Target& t, const EnhancerParams& params, const TrainConfig& c,
                            Phase phase, std::vector<double>& flat_grad) {
  const SamplePair& pair = *t.pair;
  const ForwardTrace trace = forward_trace(pair.input, pair.cond, params);
  const LossBreakdown loss = losses_for(t, trace, c);

  GradientImage grad_out(pair.input.width(), pair.input.height());
  GradientImage grad_bright(pair.input.width(), pair.input.height());
  if (phase != Phase::kStage2) grad_bright = stage1_loss_grad(trace.bright, pair.gt);
  if (phase != Phase::kStage1) {
    if (c.w_l1lab > 0.0) {
      const GradientImage g = lab_l1_loss_grad(trace.output, t.gt_lab);
      for (std::size_t i = 0; i < g.size(); ++i) {
        grad_out[i].r += c.w_l1lab * g[i].r;
        grad_out[i].g += c.w_l1lab * g[i].g;
        grad_out[i].b += c.w_l1lab * g[i].b;
      }
    }
    if (c.w_hue > 0.0) {
      const GradientImage g = hue_palette_loss_grad(trace.output, pair.gt, t.masks);
      for (std::size_t i = 0; i < g.size(); ++i) {
        grad_out[i].r += c.w_hue * g[i].r;
        grad_out[i].g += c.w_hue * g[i].g;
        grad_out[i].b += c.w_hue * g[i].b;
      }
    }
  }
  EnhancerParams g = backward(pair.input, pair.cond, params, grad_out, grad_bright);
  if (c.w_monotone > 0.0 && phase != Phase::kStage2)
    params.stage1_curve.accumulate_monotonicity_grad(c.w_monotone, g.stage1_curve.knots());
  flat_grad = g.flatten();
  return loss;
}

// Flat index range [0, n) owned by stage 1.
std::size_t stage1_extent(const EnhancerParams& p) {
  return static_cast<std::size_t>(p.knot_count()) + p.stage1_branch.parameter_count();
}

void mask_phase(std::vector<double>& grad, std::size_t stage1_end, Phase phase) {
  if (phase == Phase::kStage1) std::fill(grad.begin() + stage1_end, grad.end(), 0.0);
  if (phase == Phase::kStage2) std::fill(grad.begin(), grad.begin() + stage1_end, 0.0);
}

void accumulate(LossBreakdown& acc, const LossBreakdown& l) {
  acc.stage1 += l.stage1;
  acc.l1lab += l.l1lab;
  acc.hue += l.hue;
  acc.total += l.total;
}

void scale(LossBreakdown& l, double s) {
  l.stage1 *= s;
  l.l1lab *= s;
  l.hue *= s;
  l.total *= s;
}

}  // namespace

LossBreakdown evaluate_pair(const SamplePair& pair, const HuePaletteMask& masks,
                            const EnhancerParams& params, const TrainConfig& config) {
  const Target t{&pair, masks, rgb_to_lab(pair.gt)};
  return losses_for(t, forward_trace(pair.input, pair.cond, params), config);
}

LossBreakdown evaluate(std::span<const SamplePair> data, const EnhancerParams& params,
                       const TrainConfig& config) {
  LossBreakdown acc;
  if (data.empty()) return acc;
  for (const Target& t : make_targets(data, config.hue_bins))
    accumulate(acc, losses_for(t, forward_trace(t.pair->input, t.pair->cond, params), config));
  scale(acc, 1.0 / static_cast<double>(data.size()));
  // Recompose so the logged total is exactly its weighted parts.
  acc.total = acc.stage1 + config.w_l1lab * acc.l1lab + config.w_hue * acc.hue;
  return acc;
}

double mean_psnr(std::span<const SamplePair> data, const EnhancerParams& params) {
  if (data.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (const SamplePair& p : data) sum += psnr(forward(p.input, p.cond, params), p.gt);
  return sum / static_cast<double>(data.size());
}

TrainResult train(std::span<const SamplePair> data, const TrainConfig& config,
                  std::span<const SamplePair> validation) {
  config.validate();
  TrainResult result;
  result.params = EnhancerParams::identity(config.knots, config.hidden, config.seed);
  if (config.epochs == 0) return result;
  if (data.empty()) throw std::invalid_argument("train: empty training set");

  const std::vector<Target> targets = make_targets(data, config.hue_bins);
  std::vector<double> flat = result.params.flatten();
  const std::size_t stage1_end = stage1_extent(result.params);
  std::mt19937_64 rng(config.seed);

  std::vector<Phase> phases;
  if (config.stage_wise) {
    phases = {Phase::kStage1, Phase::kStage2};
  } else {
    phases = {Phase::kJoint};
  }

  std::vector<std::size_t> order(targets.size());
  std::vector<double> batch_grad(flat.size());
  std::vector<double> sample_grad;
  int epoch_counter = 0;
  for (Phase phase : phases) {
    // Fresh moments per phase so a frozen stage carries no momentum.
    Adam adam(flat.size(), config.learning_rate, config.beta1, config.beta2, config.adam_epsilon);
    for (int e = 0; e < config.epochs; ++e) {
      std::iota(order.begin(), order.end(), 0);
      // Fisher-Yates with raw engine output: reproducible across std libraries.
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

      LossBreakdown epoch_loss;
      for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
        const std::size_t end = std::min(order.size(), start + static_cast<std::size_t>(config.batch_size));
        std::fill(batch_grad.begin(), batch_grad.end(), 0.0);
        for (std::size_t b = start; b < end; ++b) {
          accumulate(epoch_loss, pair_gradient(targets[order[b]], result.params, config, phase, sample_grad));
          for (std::size_t i = 0; i < batch_grad.size(); ++i) batch_grad[i] += sample_grad[i];
        }
        const double inv = 1.0 / static_cast<double>(end - start);
        for (double& g : batch_grad) g *= inv;
        mask_phase(batch_grad, stage1_end, phase);
        adam.step(flat, batch_grad);
        result.params.assign(flat);
        ++result.steps;
      }
      scale(epoch_loss, 1.0 / static_cast<double>(order.size()));
      epoch_loss.total = epoch_loss.stage1 + config.w_l1lab * epoch_loss.l1lab + config.w_hue * epoch_loss.hue;

      EpochLog log;
      log.epoch = ++epoch_counter;
      log.loss = epoch_loss;
      if (!validation.empty()) log.psnr_val = mean_psnr(validation, result.params);
      result.history.push_back(log);
    }
  }
  return result;
}

void write_log_csv(std::ostream& out, const std::vector<EpochLog>& history, std::uint64_t seed) {
  out << "# seed=" << seed << '\n';
  out << "epoch,stage1,l1lab,hue,total,psnr_val\n";
  char buf[256];
  for (const EpochLog& e : history) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,", e.epoch, e.loss.stage1, e.loss.l1lab,
                  e.loss.hue, e.loss.total);
    out << buf;
    if (!std::isnan(e.psnr_val)) {
      std::snprintf(buf, sizeof buf, "%.17g", e.psnr_val);
      out << buf;
    }
    out << '\n';
  }
}

std::vector<BinSweepRow> sweep_hue_bins(std::span<const SamplePair> train_set,
                                        std::span<const SamplePair> test_set,
                                        const TrainConfig& config, std::span<const int> bins) {
  std::vector<BinSweepRow> rows;
  for (int b : bins) {
    TrainConfig c = config;
    c.hue_bins = b;
    const TrainResult r = train(train_set, c);
    rows.push_back({b, mean_psnr(test_set, r.params)});
  }
  return rows;
}

}  // namespace lcc
