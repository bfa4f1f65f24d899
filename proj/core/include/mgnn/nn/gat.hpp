#pragma once

#include <cstddef>
#include <string>

#include "mgnn/nn/message_graph.hpp"
#include "mgnn/tensor/parameter.hpp"

namespace mgnn {

struct GatConfig {
  std::size_t in_features = 1;
  /// Width of each head.
  std::size_t out_features = 8;
  std::size_t heads = 1;
  double negative_slope = 0.2;
  /// Concatenate heads (width heads*out_features) or average them.
  bool concat = true;

  std::size_t output_width() const { return concat ? heads * out_features : out_features; }
};

/*
  Graph attention layer. For a message j -> i and head h:

    z_j   = W_h x_j
    e_ij  = LeakyReLU(a_h . [z_i || z_j])
    alpha = softmax of e_ij over the messages arriving at i
    out_i = sum_j alpha_ij z_j

  Parameters: "<prefix>.weight" [in x heads*out] (head h owns column block h)
  and "<prefix>.att" [heads x 2*out], destination half first.
*/
class GatLayer {
 public:
  GatLayer(const GatConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng);

  /// `attention`, when given, receives alpha [messages x heads].
  Tensor forward(const Tensor& x, const MessageGraph& g, Tensor* attention = nullptr,
                 ForwardStats* stats = nullptr) const;

  const GatConfig& config() const { return cfg_; }
  const Tensor& weight() const { return weight_; }
  const Tensor& att() const { return att_; }

 private:
  GatConfig cfg_;
  Tensor weight_;
  Tensor att_;
};

}  // namespace mgnn
