#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mgnn/mlgraph/ids.hpp"
#include "mgnn/mlgraph/layer_graph.hpp"

namespace mgnn {

/// Undirected coupling between replicas in two distinct layers.
struct InterEdge {
  ReplicaId src;
  ReplicaId dst;
  double weight = 1.0;

  friend bool operator==(const InterEdge&, const InterEdge&) = default;
};

/// Dense per-replica features, row `flatten(r, N)` holds replica r.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values).subspan(r * cols, cols);
  }
};

/*
  N nodes replicated over L layers: one LayerGraph per layer plus the
  explicit list of inter-layer edges. Immutable after construction and safe
  to share across threads.
*/
class MultilayerNetwork {
 public:
  MultilayerNetwork(std::size_t n_nodes, std::vector<LayerGraph> layers,
                    std::vector<InterEdge> inter_edges = {},
                    std::optional<FeatureMatrix> features = std::nullopt);

  std::size_t n_nodes() const { return n_nodes_; }
  std::size_t n_layers() const { return layers_.size(); }
  std::size_t n_replicas() const { return n_nodes_ * layers_.size(); }

  const LayerGraph& layer(LayerId alpha) const;
  std::span<const LayerGraph> layers() const { return layers_; }
  std::span<const InterEdge> inter_edges() const { return inter_edges_; }
  const std::optional<FeatureMatrix>& features() const { return features_; }

  std::size_t n_intra_edges() const;
  bool all_undirected() const;

  MultilayerNetwork with_inter_edges(std::vector<InterEdge> inter_edges) const;
  MultilayerNetwork with_layer(LayerId alpha, LayerGraph graph) const;
  MultilayerNetwork with_features(std::optional<FeatureMatrix> features) const;

 private:
  std::size_t n_nodes_;
  std::vector<LayerGraph> layers_;
  std::vector<InterEdge> inter_edges_;
  std::optional<FeatureMatrix> features_;
};

struct MultiplexClique {
  double weight = 1.0;
};

struct ExplicitInterlayer {
  std::vector<InterEdge> edges;
};

using InterlayerPolicy = std::variant<MultiplexClique, ExplicitInterlayer>;

/// Connects all replicas of every node in a clique: N*L*(L-1)/2 edges.
/// Throws if the network already has inter-layer edges.
MultilayerNetwork build_multiplex_clique(const MultilayerNetwork& net, double weight);

MultilayerNetwork apply_interlayer(const MultilayerNetwork& net, const InterlayerPolicy& policy);

/// The L intra-layer graphs and the inter-layer graph, all re-indexed over
/// the N*L flattened replica ids.
struct ExplodedNetwork {
  std::size_t n_nodes = 0;
  std::size_t n_layers = 0;
  std::vector<LayerGraph> intra;
  LayerGraph inter;
};

ExplodedNetwork explode(const MultilayerNetwork& net);

}  // namespace mgnn
