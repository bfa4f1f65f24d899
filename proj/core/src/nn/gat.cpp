#include "mgnn/nn/gat.hpp"

#include <stdexcept>

#include "mgnn/nn/linear.hpp"

namespace mgnn {

GatLayer::GatLayer(const GatConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng) : cfg_(cfg) {
  if (cfg.in_features == 0 || cfg.out_features == 0 || cfg.heads == 0) {
    throw std::invalid_argument("GatLayer: zero width or head count");
  }
  if (!(cfg.negative_slope > 0.0 && cfg.negative_slope < 1.0)) {
    throw std::invalid_argument("GatLayer: negative slope must lie in (0, 1)");
  }
  const std::size_t hf = cfg.heads * cfg.out_features;
  weight_ = store.add(prefix + ".weight", glorot_uniform({cfg.in_features, hf}, cfg.in_features, hf, rng)).tensor;
  att_ = store.add(prefix + ".att", glorot_uniform({cfg.heads, 2 * cfg.out_features}, cfg.heads,
                                                   2 * cfg.out_features, rng))
             .tensor;
}

Tensor GatLayer::forward(const Tensor& x, const MessageGraph& g, Tensor* attention, ForwardStats* stats) const {
  if (x.rank() != 2 || x.cols() != cfg_.in_features) {
    throw std::invalid_argument("GatLayer: expected input width " + std::to_string(cfg_.in_features) + ", got " +
                                shape_string(x.shape()));
  }
  if (x.rows() != g.n_nodes) throw std::invalid_argument("GatLayer: feature rows do not match graph size");

  const std::size_t f = cfg_.out_features;
  const Tensor z = matmul(x, weight_);
  const Tensor s_dst = head_dot(z, slice_cols(att_, 0, f));
  const Tensor s_src = head_dot(z, slice_cols(att_, f, f));
  const Tensor e = leaky_relu(add(gather_rows(s_dst, g.dst), gather_rows(s_src, g.src)), cfg_.negative_slope);
  const Tensor alpha = segment_softmax(e, g.dst, g.n_nodes);
  if (attention) *attention = alpha;
  if (stats) stats->messages += g.n_messages();

  Tensor out = attention_aggregate(alpha, z, g.src, g.dst, g.n_nodes);
  return cfg_.concat ? out : head_mean(out, cfg_.heads);
}

}  // namespace mgnn
