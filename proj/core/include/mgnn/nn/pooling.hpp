#pragma once

#include <cstddef>
#include <string>

#include "mgnn/nn/linear.hpp"

namespace mgnn {

/*
  Global soft-attention readout over all replicas of one network:

    w   = softmax_i(gate(h_i))          (over every row)
    out = sum_i w_i * transform(h_i)    [1 x out]
*/
class SoftAttentionPool {
 public:
  SoftAttentionPool(std::size_t in, std::size_t out, ParameterStore& store, const std::string& prefix, Rng& rng);

  Tensor forward(const Tensor& h) const;
  /// The softmax weights [rows x 1].
  Tensor weights(const Tensor& h) const;

  const Linear& gate() const { return gate_; }
  const Linear& transform() const { return transform_; }

 private:
  Linear gate_;
  Linear transform_;
};

}  // namespace mgnn
