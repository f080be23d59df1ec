#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fognet/data.hpp"
#include "fognet/folds.hpp"
#include "fognet/metrics.hpp"
#include "fognet/network.hpp"

namespace fognet {

// ---------------------------------------------------------------------------
// AdamW with decoupled weight decay
// ---------------------------------------------------------------------------

struct AdamWConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.01;
};

// One bias-corrected moment update; the decay term lr*wd*theta is applied to
// the parameter directly, never folded into the gradient. `step` counts from 1.
template <class T>
void adamw_update(std::span<T> value, std::span<const T> grad, std::span<T> m, std::span<T> v,
                  int64_t step, const AdamWConfig& cfg);

template <class T>
class AdamWOptimizer {
 public:
  // Binds a model to its gradient twin; running statistics are skipped.
  AdamWOptimizer(ModelParameters<T>& params, ModelParameters<T>& grads, AdamWConfig cfg);

  void step();
  void set_learning_rate(double lr) { cfg_.learning_rate = lr; }
  double learning_rate() const { return cfg_.learning_rate; }
  int64_t step_count() const { return step_; }

 private:
  struct Slot {
    std::vector<T>* value = nullptr;
    std::vector<T>* grad = nullptr;
    std::vector<T> m, v;
  };
  std::vector<Slot> slots_;
  AdamWConfig cfg_;
  int64_t step_ = 0;
};

// ---------------------------------------------------------------------------
// Plateau learning-rate scheduler
// ---------------------------------------------------------------------------

struct SchedulerConfig {
  double factor = 0.1;
  double min_delta = 1e-4;
  double min_lr = 1e-6;
  int64_t patience = 10;
  // The monitored quantity: mean training loss over consecutive segments of
  // this many batches (a single epoch offers no per-epoch validation metric).
  int64_t segment_batches = 100;
};

class PlateauScheduler {
 public:
  PlateauScheduler(double initial_lr, const SchedulerConfig& cfg);

  // Feed one observation of the monitored metric; returns the current lr.
  double update(double metric);
  double lr() const { return lr_; }
  int64_t decays() const { return decays_; }

 private:
  SchedulerConfig cfg_;
  double lr_;
  double best_;
  int64_t bad_evals_ = 0;
  int64_t decays_ = 0;
};

// ---------------------------------------------------------------------------
// Fold training and ensemble inference
// ---------------------------------------------------------------------------

struct TrainConfig {
  int64_t batch_size = 1024;
  int64_t epochs = 1;
  int64_t sample_budget = 5'000'000;
  uint64_t seed = 0;
  AdamWConfig adamw;          // learning_rate doubles as the initial lr
  SchedulerConfig scheduler;
  WindowSpec window;
  NetworkSpec network;
  int64_t predict_stride = 1;
  int64_t predict_batch = 256;
  RowExclusion row_exclusion = RowExclusion::kNone;

  TrainConfig() : network(default_network_spec()) {}
  void validate() const;
};

uint64_t train_config_digest(const TrainConfig& config);

struct FoldReport {
  int fold_id = 0;
  std::array<std::optional<double>, 3> ap;  // StartHesitation, Turn, Walking
  double map = 0.0;
  bool any_undefined = false;
  int64_t train_series = 0, val_series = 0;
  int64_t train_windows = 0, batches = 0;
  double first_loss = 0.0;  // mean over the leading batches
  double last_loss = 0.0;   // mean over the trailing batches
  double final_lr = 0.0;
};

struct TrainResult {
  FoldReport report;
  ModelParameters<float> params;
  CheckpointMeta meta;
};

// Trains the series outside `fold_id` for config.epochs over the budgeted
// window sample, then scores the fold's own series. Deterministic given
// (config, catalog, folds): reruns produce bit-identical parameters.
TrainResult train_fold(const TrainConfig& config, const Catalog& catalog,
                       const FoldAssignment& folds, int fold_id);

// Per-timepoint 3-class probabilities for one series: every stride-th anchor
// gets a fresh window -> eval forward -> sigmoid -> model average; timepoints
// between anchors hold the latest computed value.
std::vector<std::array<float, 3>> predict_series(
    const std::vector<const ModelParameters<float>*>& models, const SeriesRecord& series,
    const WindowSpec& window, int64_t stride = 1, int64_t batch = 256);

// Collects per-class (score, label) pairs across series and computes AP.
class ApAccumulator {
 public:
  void add(const SeriesRecord& series, const std::vector<std::array<float, 3>>& probs);
  std::array<std::optional<double>, 3> compute() const;

 private:
  std::array<std::vector<double>, 3> scores_;
  std::array<std::vector<uint8_t>, 3> labels_;
};

// Table-style report rendering (one row per fold plus a mean row) and the
// companion CSV, columns fold,ap_starthesitation,ap_turn,ap_walking,map,...
std::string render_fold_table(const std::vector<FoldReport>& reports);
void write_fold_reports_csv(const std::vector<FoldReport>& reports,
                            const std::filesystem::path& path);

}  // namespace fognet
