#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "mgnn/tensor/tensor.hpp"

namespace mgnn {

/// Trainable leaf plus the optimiser's moment estimates.
struct Parameter {
  std::string name;
  Tensor tensor;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
};

/*
  Owns the parameters of one model. References returned by add() stay valid
  for the lifetime of the store; iteration order is insertion order, which
  is also the checkpoint order.
*/
class ParameterStore {
 public:
  /// Registers `init` (copied into a fresh leaf requiring gradients).
  /// Throws std::invalid_argument if the name is taken.
  Parameter& add(const std::string& name, const Tensor& init);

  Parameter* find(const std::string& name);
  const Parameter* find(const std::string& name) const;

  std::deque<Parameter>& parameters() { return params_; }
  const std::deque<Parameter>& parameters() const { return params_; }
  std::size_t size() const { return params_.size(); }
  std::size_t total_elements() const;

  void zero_grad();

  using Snapshot = std::vector<std::vector<double>>;
  Snapshot snapshot() const;
  void restore(const Snapshot& values);

 private:
  std::deque<Parameter> params_;
};

}  // namespace mgnn
