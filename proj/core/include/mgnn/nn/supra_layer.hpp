#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mgnn/nn/aggregator.hpp"
#include "mgnn/nn/gat.hpp"

namespace mgnn {

struct SupraLayerConfig {
  GatConfig intra;
  GatConfig inter;
  /// Combines (h_intra, h_inter); arity 2.
  AggregatorConfig agg;
  /// One intra GAT per network layer instead of a single shared one.
  bool per_layer_intra = false;
  std::size_t n_layers = 1;
};

/*
  One supra-layer: an intra GAT over the L intra-layer graphs (shared
  parameters unless per_layer_intra), an inter GAT over the inter-layer
  graph, both reading the same replica features, fused row-wise by the
  aggregator.
*/
class SupraLayer {
 public:
  SupraLayer(const SupraLayerConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng);

  Tensor forward(const Tensor& h, const SupraGraphs& g, ForwardStats* stats = nullptr) const;

  /// The two branches before aggregation.
  Tensor intra(const Tensor& h, const SupraGraphs& g, ForwardStats* stats = nullptr) const;
  Tensor inter(const Tensor& h, const SupraGraphs& g, ForwardStats* stats = nullptr) const;

  const SupraLayerConfig& config() const { return cfg_; }
  std::size_t output_width() const { return cfg_.agg.output_width(); }
  const Aggregator& aggregator() const { return agg_; }

 private:
  SupraLayerConfig cfg_;
  std::vector<GatLayer> intra_;
  GatLayer inter_;
  Aggregator agg_;
};

enum class Activation { none, relu, elu };

std::string_view to_string(Activation a);
Activation parse_activation(std::string_view name);
Tensor apply_activation(const Tensor& x, Activation a);

struct SupraStackConfig {
  std::size_t in_features = 1;
  std::size_t n_layers = 1;
  std::size_t depth = 1;
  std::size_t features = 8;
  std::size_t heads = 1;
  double negative_slope = 0.2;
  AggregatorKind aggregator = AggregatorKind::concat_linear;
  bool per_layer_intra = false;
  /// Inverted dropout on the input of every supra-layer.
  double dropout = 0.0;
  /// Applied between supra-layers, not after the last.
  Activation activation = Activation::elu;

  std::size_t output_width() const { return heads * features; }
};

class SupraStack {
 public:
  SupraStack(const SupraStackConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng);

  Tensor forward(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng,
                 ForwardStats* stats = nullptr) const;

  const SupraStackConfig& config() const { return cfg_; }
  const std::vector<SupraLayer>& layers() const { return layers_; }
  std::size_t output_width() const { return cfg_.output_width(); }

 private:
  SupraStackConfig cfg_;
  std::vector<SupraLayer> layers_;
};

}  // namespace mgnn
