#include "mgnn/nn/models.hpp"

#include <stdexcept>

namespace mgnn {

Tensor link_score(const Tensor& r_i, const Tensor& r_j, const Mlp& mlp) {
  if (r_i.shape() != r_j.shape()) throw std::invalid_argument("link_score: embedding shapes differ");
  return sigmoid(mlp.forward(concat_cols({r_i, r_j})));
}

namespace {

AggregatorConfig readout_config(const NodeClassifier::Config& cfg) {
  AggregatorConfig a;
  a.kind = AggregatorKind::mlp;
  a.arity = cfg.stack.n_layers;
  a.in_width = cfg.stack.output_width();
  a.out_width = cfg.n_classes;
  a.hidden = cfg.readout_hidden;
  return a;
}

}  // namespace

NodeClassifier::NodeClassifier(const Config& cfg, ParameterStore& store, Rng& rng)
    : cfg_(cfg), stack_(cfg.stack, store, "stack", rng), readout_(readout_config(cfg), store, "readout", rng) {
  if (cfg.n_classes < 2) throw std::invalid_argument("NodeClassifier: need at least two classes");
}

Tensor NodeClassifier::logits(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng) const {
  const Tensor h = stack_.forward(x, g, training, rng);
  return replica_aggregate(h, g.n_nodes, g.n_layers, readout_);
}

LinkPredictor::LinkPredictor(const Config& cfg, ParameterStore& store, Rng& rng)
    : cfg_(cfg),
      stack_(cfg.stack, store, "stack", rng),
      scorer_(2 * cfg.stack.output_width(), cfg.score_hidden, 1, store, "scorer", rng) {}

Tensor LinkPredictor::embed(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng) const {
  return stack_.forward(x, g, training, rng);
}

Tensor LinkPredictor::pair_logits(const Tensor& h, const IndexArray& rows_i, const IndexArray& rows_j) const {
  return scorer_.forward(concat_cols({gather_rows(h, rows_i), gather_rows(h, rows_j)}));
}

GraphRegressor::GraphRegressor(const Config& cfg, ParameterStore& store, Rng& rng)
    : cfg_(cfg),
      stack_(cfg.stack, store, "stack", rng),
      pool_(cfg.stack.output_width(), cfg.pool_width, store, "pool", rng),
      head_(cfg.pool_width, 1, store, "head", rng) {}

Tensor GraphRegressor::predict(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng) const {
  const Tensor h = stack_.forward(x, g, training, rng);
  return sigmoid(head_.forward(pool_.forward(h)));
}

}  // namespace mgnn
