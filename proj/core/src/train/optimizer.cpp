#include "mgnn/train/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgnn {

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning_rate must be positive");
  }
  if (!(weight_decay >= 0.0) || !std::isfinite(weight_decay)) {
    throw std::invalid_argument("weight_decay must be non-negative");
  }
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
    throw std::invalid_argument("betas must lie in [0, 1)");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

AdamW::AdamW(const OptimizerConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

void AdamW::step(ParameterStore& store) {
  for (const Parameter& p : store.parameters()) {
    for (double g : p.tensor.grad()) {
      if (!std::isfinite(g)) throw std::runtime_error("non-finite gradient in parameter '" + p.name + "'");
    }
  }
  ++t_;
  const double lr = cfg_.learning_rate;
  const double c1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (Parameter& p : store.parameters()) {
    auto x = p.tensor.mutable_values();
    auto g = p.tensor.grad();
    if (p.first_moment.size() != x.size()) p.first_moment.assign(x.size(), 0.0);
    if (p.second_moment.size() != x.size()) p.second_moment.assign(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double gi = g.empty() ? 0.0 : g[i];
      x[i] -= lr * cfg_.weight_decay * x[i];
      p.first_moment[i] = cfg_.beta1 * p.first_moment[i] + (1.0 - cfg_.beta1) * gi;
      p.second_moment[i] = cfg_.beta2 * p.second_moment[i] + (1.0 - cfg_.beta2) * gi * gi;
      x[i] -= lr * (p.first_moment[i] / c1) / (std::sqrt(p.second_moment[i] / c2) + cfg_.epsilon);
    }
  }
}

}  // namespace mgnn
