#pragma once

#include <cstddef>

#include "mgnn/tensor/parameter.hpp"

namespace mgnn {

struct OptimizerConfig {
  double learning_rate = 1e-3;
  double weight_decay = 0.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/*
  Adaptive moments with decoupled weight decay. Per parameter p with
  gradient g, at step t:

    p <- p - lr * decay * p
    m <- b1 m + (1 - b1) g,   v <- b2 v + (1 - b2) g^2
    p <- p - lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)

  Moments live in the Parameter slots. A non-finite gradient throws
  std::runtime_error naming the parameter, before anything is modified.
*/
class AdamW {
 public:
  explicit AdamW(const OptimizerConfig& cfg);

  void step(ParameterStore& store);

  std::size_t steps() const { return t_; }
  const OptimizerConfig& config() const { return cfg_; }

 private:
  OptimizerConfig cfg_;
  std::size_t t_ = 0;
};

}  // namespace mgnn
