#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgnn/tensor/ops.hpp"
#include "mgnn/tensor/parameter.hpp"
#include "mgnn/train/optimizer.hpp"

namespace mgnn {

struct EarlyStopConfig {
  std::size_t max_epochs = 100;
  /// Training stops once this many consecutive epochs have passed without
  /// a new best monitored loss (patience 0: stop at the first miss).
  std::size_t patience = 10;

  void validate() const;
};

/*
  What the loop needs from a task. Each epoch calls begin_epoch (which may
  reshuffle and returns the number of batches), then one optimiser step per
  batch on batch_loss. validation_loss is evaluated with gradient recording
  off; when it is empty the mean training loss is monitored instead.
*/
struct Objective {
  std::function<std::size_t(Rng&)> begin_epoch;
  std::function<Tensor(std::size_t batch, Rng&)> batch_loss;
  std::function<double()> validation_loss;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  double val_loss = 0.0;
};

struct TrainResult {
  std::vector<EpochRecord> history;
  std::size_t best_epoch = 0;
  double best_loss = 0.0;
  bool stopped_early = false;
};

/// Runs the loop and leaves the best-epoch parameters in `store`. Throws
/// std::runtime_error on a non-finite loss, naming the epoch.
TrainResult train_loop(ParameterStore& store, const Objective& objective, const OptimizerConfig& opt,
                       const EarlyStopConfig& stop, std::uint64_t seed,
                       const std::function<void(const EpochRecord&)>& on_epoch = {});

/// One JSON object per line: {"epoch":..,"train_loss":..,"val_loss":..}.
void write_history(std::ostream& out, const std::vector<EpochRecord>& history);

}  // namespace mgnn
