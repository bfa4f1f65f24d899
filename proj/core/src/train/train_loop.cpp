#include "mgnn/train/train_loop.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "mgnn/util/format.hpp"

namespace mgnn {

void EarlyStopConfig::validate() const {
  if (max_epochs == 0) throw std::invalid_argument("max_epochs must be at least 1");
}

TrainResult train_loop(ParameterStore& store, const Objective& objective, const OptimizerConfig& opt,
                       const EarlyStopConfig& stop, std::uint64_t seed,
                       const std::function<void(const EpochRecord&)>& on_epoch) {
  stop.validate();
  if (!objective.begin_epoch || !objective.batch_loss) throw std::invalid_argument("train_loop: incomplete objective");
  AdamW optimizer(opt);
  Rng rng(seed);
  TrainResult result;
  ParameterStore::Snapshot best;
  std::size_t misses = 0;

  for (std::size_t epoch = 1; epoch <= stop.max_epochs; ++epoch) {
    const std::size_t batches = objective.begin_epoch(rng);
    if (batches == 0) throw std::invalid_argument("train_loop: epoch with no batches");
    double total = 0.0;
    for (std::size_t b = 0; b < batches; ++b) {
      store.zero_grad();
      const Tensor loss = objective.batch_loss(b, rng);
      const double value = loss.item();
      if (!std::isfinite(value)) {
        throw std::runtime_error("non-finite training loss at epoch " + std::to_string(epoch));
      }
      loss.backward();
      optimizer.step(store);
      total += value;
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = total / static_cast<double>(batches);
    if (objective.validation_loss) {
      NoGradGuard guard;
      rec.val_loss = objective.validation_loss();
      if (!std::isfinite(rec.val_loss)) {
        throw std::runtime_error("non-finite validation loss at epoch " + std::to_string(epoch));
      }
    } else {
      rec.val_loss = rec.train_loss;
    }
    result.history.push_back(rec);
    if (on_epoch) on_epoch(rec);

    if (result.best_epoch == 0 || rec.val_loss < result.best_loss) {
      result.best_epoch = epoch;
      result.best_loss = rec.val_loss;
      best = store.snapshot();
      misses = 0;
    } else if (++misses > stop.patience) {
      result.stopped_early = true;
      break;
    }
  }
  store.restore(best);
  return result;
}

void write_history(std::ostream& out, const std::vector<EpochRecord>& history) {
  for (const EpochRecord& r : history) {
    out << "{\"epoch\":" << r.epoch << ",\"train_loss\":" << format_double(r.train_loss)
        << ",\"val_loss\":" << format_double(r.val_loss) << "}\n";
  }
}

}  // namespace mgnn
