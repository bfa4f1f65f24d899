#include "mgnn/nn/supra_layer.hpp"

#include <stdexcept>

namespace mgnn {

namespace {

std::vector<GatLayer> make_intra(const SupraLayerConfig& cfg, ParameterStore& store, const std::string& prefix,
                                 Rng& rng) {
  std::vector<GatLayer> out;
  if (!cfg.per_layer_intra) {
    out.emplace_back(cfg.intra, store, prefix + ".intra", rng);
  } else {
    for (std::size_t a = 0; a < cfg.n_layers; ++a) {
      out.emplace_back(cfg.intra, store, prefix + ".intra" + std::to_string(a), rng);
    }
  }
  return out;
}

AggregatorConfig checked_agg(const SupraLayerConfig& cfg) {
  if (cfg.intra.in_features != cfg.inter.in_features) {
    throw std::invalid_argument("SupraLayer: intra and inter GATs must read the same input width");
  }
  if (cfg.intra.output_width() != cfg.inter.output_width()) {
    throw std::invalid_argument("SupraLayer: intra and inter output widths differ");
  }
  if (cfg.agg.arity != 2 || cfg.agg.in_width != cfg.intra.output_width()) {
    throw std::invalid_argument("SupraLayer: aggregator must take two inputs of the GAT output width");
  }
  return cfg.agg;
}

}  // namespace

SupraLayer::SupraLayer(const SupraLayerConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng)
    : cfg_(cfg),
      intra_(make_intra(cfg, store, prefix, rng)),
      inter_(cfg.inter, store, prefix + ".inter", rng),
      agg_(checked_agg(cfg), store, prefix + ".agg", rng) {}

Tensor SupraLayer::intra(const Tensor& h, const SupraGraphs& g, ForwardStats* stats) const {
  if (!cfg_.per_layer_intra) return intra_.front().forward(h, g.intra, nullptr, stats);
  if (g.n_layers != intra_.size()) throw std::invalid_argument("SupraLayer: layer count mismatch");
  std::vector<Tensor> blocks;
  blocks.reserve(g.n_layers);
  for (std::size_t a = 0; a < g.n_layers; ++a) {
    blocks.push_back(intra_[a].forward(slice_rows(h, a * g.n_nodes, g.n_nodes), g.per_layer[a], nullptr, stats));
  }
  return blocks.size() == 1 ? blocks.front() : concat_rows(blocks);
}

Tensor SupraLayer::inter(const Tensor& h, const SupraGraphs& g, ForwardStats* stats) const {
  return inter_.forward(h, g.inter, nullptr, stats);
}

Tensor SupraLayer::forward(const Tensor& h, const SupraGraphs& g, ForwardStats* stats) const {
  return agg_.forward({intra(h, g, stats), inter(h, g, stats)});
}

std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::none: return "none";
    case Activation::relu: return "relu";
    case Activation::elu: return "elu";
  }
  return "?";
}

Activation parse_activation(std::string_view name) {
  if (name == "none") return Activation::none;
  if (name == "relu") return Activation::relu;
  if (name == "elu") return Activation::elu;
  throw std::invalid_argument("unknown activation '" + std::string(name) + "'");
}

Tensor apply_activation(const Tensor& x, Activation a) {
  switch (a) {
    case Activation::none: return x;
    case Activation::relu: return relu(x);
    case Activation::elu: return elu(x);
  }
  return x;
}

SupraStack::SupraStack(const SupraStackConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng)
    : cfg_(cfg) {
  if (cfg.depth == 0) throw std::invalid_argument("SupraStack: depth must be at least 1");
  if (cfg.dropout < 0.0 || cfg.dropout >= 1.0) throw std::invalid_argument("SupraStack: dropout must lie in [0, 1)");
  std::size_t width = cfg.in_features;
  for (std::size_t k = 0; k < cfg.depth; ++k) {
    SupraLayerConfig lc;
    lc.intra = GatConfig{width, cfg.features, cfg.heads, cfg.negative_slope, true};
    lc.inter = lc.intra;
    lc.agg.kind = cfg.aggregator;
    lc.agg.arity = 2;
    lc.agg.in_width = lc.intra.output_width();
    lc.agg.out_width = cfg.output_width();
    lc.per_layer_intra = cfg.per_layer_intra;
    lc.n_layers = cfg.n_layers;
    layers_.emplace_back(lc, store, prefix + "." + std::to_string(k), rng);
    width = layers_.back().output_width();
  }
}

Tensor SupraStack::forward(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng,
                           ForwardStats* stats) const {
  Tensor h = x;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    h = dropout(h, cfg_.dropout, rng, training);
    h = layers_[k].forward(h, g, stats);
    if (k + 1 < layers_.size()) h = apply_activation(h, cfg_.activation);
  }
  return h;
}

}  // namespace mgnn
