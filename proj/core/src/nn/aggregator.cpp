#include "mgnn/nn/aggregator.hpp"

#include <stdexcept>

namespace mgnn {

std::string_view to_string(AggregatorKind kind) {
  switch (kind) {
    case AggregatorKind::sum: return "sum";
    case AggregatorKind::mean: return "mean";
    case AggregatorKind::concat_linear: return "concat_linear";
    case AggregatorKind::mlp: return "mlp";
  }
  return "?";
}

AggregatorKind parse_aggregator(std::string_view name) {
  if (name == "sum") return AggregatorKind::sum;
  if (name == "mean") return AggregatorKind::mean;
  if (name == "concat_linear") return AggregatorKind::concat_linear;
  if (name == "mlp") return AggregatorKind::mlp;
  throw std::invalid_argument("unknown aggregator '" + std::string(name) + "'");
}

Aggregator::Aggregator(const AggregatorConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng)
    : cfg_(cfg) {
  if (cfg.arity == 0 || cfg.in_width == 0) throw std::invalid_argument("Aggregator: zero arity or width");
  if (cfg.kind == AggregatorKind::concat_linear) {
    linear_.emplace(cfg.arity * cfg.in_width, cfg.out_width, store, prefix + ".linear", rng);
  } else if (cfg.kind == AggregatorKind::mlp) {
    mlp_.emplace(cfg.arity * cfg.in_width, cfg.hidden, cfg.out_width, store, prefix + ".mlp", rng);
  }
}

Tensor Aggregator::forward(const std::vector<Tensor>& inputs) const {
  if (inputs.size() != cfg_.arity) {
    throw std::invalid_argument("Aggregator: expected " + std::to_string(cfg_.arity) + " inputs, got " +
                                std::to_string(inputs.size()));
  }
  for (const Tensor& t : inputs) {
    if (t.rank() != 2 || t.cols() != cfg_.in_width || t.rows() != inputs.front().rows()) {
      throw std::invalid_argument("Aggregator: input of shape " + shape_string(t.shape()) +
                                  " does not match declared width " + std::to_string(cfg_.in_width));
    }
  }
  switch (cfg_.kind) {
    case AggregatorKind::sum:
    case AggregatorKind::mean: {
      Tensor acc = inputs.front();
      for (std::size_t k = 1; k < inputs.size(); ++k) acc = add(acc, inputs[k]);
      return cfg_.kind == AggregatorKind::mean ? scale(acc, 1.0 / static_cast<double>(inputs.size())) : acc;
    }
    case AggregatorKind::concat_linear:
      return linear_->forward(inputs.size() == 1 ? inputs.front() : concat_cols(inputs));
    case AggregatorKind::mlp:
      return mlp_->forward(inputs.size() == 1 ? inputs.front() : concat_cols(inputs));
  }
  throw std::logic_error("unreachable");
}

Tensor Aggregator::forward_concatenated(const Tensor& x) const {
  if (x.rank() != 2 || x.cols() != cfg_.arity * cfg_.in_width) {
    throw std::invalid_argument("Aggregator: concatenated input of shape " + shape_string(x.shape()) +
                                " does not match arity * width");
  }
  if (linear_) return linear_->forward(x);
  if (mlp_) return mlp_->forward(x);
  throw std::logic_error("Aggregator: sum/mean have no concatenated form");
}

Tensor replica_aggregate(const Tensor& h, std::size_t n_nodes, std::size_t n_layers, const Aggregator& agg) {
  if (agg.config().arity != n_layers) {
    throw std::invalid_argument("replica_aggregate: aggregator arity " + std::to_string(agg.config().arity) +
                                " does not match " + std::to_string(n_layers) + " layers");
  }
  const Tensor nodes = replicas_to_nodes(h, n_nodes, n_layers);
  const std::size_t f = h.cols();
  if (agg.config().kind == AggregatorKind::concat_linear || agg.config().kind == AggregatorKind::mlp) {
    // Node-major layout already is the layer-order concatenation.
    return agg.forward_concatenated(nodes);
  }
  std::vector<Tensor> parts;
  parts.reserve(n_layers);
  for (std::size_t a = 0; a < n_layers; ++a) parts.push_back(slice_cols(nodes, a * f, f));
  return agg.forward(parts);
}

}  // namespace mgnn
