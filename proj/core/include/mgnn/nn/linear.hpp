#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mgnn/tensor/ops.hpp"
#include "mgnn/tensor/parameter.hpp"

namespace mgnn {

/// Glorot/Xavier uniform initialisation, limit sqrt(6 / (fan_in + fan_out)).
Tensor glorot_uniform(Shape shape, std::size_t fan_in, std::size_t fan_out, Rng& rng);

/// y = x W + b, W [in x out], b zero-initialised.
class Linear {
 public:
  Linear(std::size_t in, std::size_t out, ParameterStore& store, const std::string& prefix, Rng& rng,
         bool bias = true);

  Tensor forward(const Tensor& x) const;

  std::size_t in_features() const { return in_; }
  std::size_t out_features() const { return out_; }
  const Tensor& weight() const { return weight_; }
  const Tensor& bias() const { return bias_; }

 private:
  std::size_t in_;
  std::size_t out_;
  Tensor weight_;
  Tensor bias_;
};

/// Linear layers with ReLU between them (none after the last).
class Mlp {
 public:
  Mlp(std::size_t in, const std::vector<std::size_t>& hidden, std::size_t out, ParameterStore& store,
      const std::string& prefix, Rng& rng);

  Tensor forward(const Tensor& x) const;

  std::size_t in_features() const { return layers_.front().in_features(); }
  std::size_t out_features() const { return layers_.back().out_features(); }

 private:
  std::vector<Linear> layers_;
};

}  // namespace mgnn
