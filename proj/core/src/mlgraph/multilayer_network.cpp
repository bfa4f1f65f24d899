#include "mgnn/mlgraph/multilayer_network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace mgnn {

MultilayerNetwork::MultilayerNetwork(std::size_t n_nodes, std::vector<LayerGraph> layers,
                                     std::vector<InterEdge> inter_edges,
                                     std::optional<FeatureMatrix> features)
    : n_nodes_(n_nodes),
      layers_(std::move(layers)),
      inter_edges_(std::move(inter_edges)),
      features_(std::move(features)) {
  if (n_nodes_ == 0) throw std::invalid_argument("a multilayer network needs at least one node");
  if (layers_.empty()) throw std::invalid_argument("a multilayer network needs at least one layer");
  for (std::size_t a = 0; a < layers_.size(); ++a) {
    if (layers_[a].n_nodes() != n_nodes_) {
      throw std::invalid_argument("layer " + std::to_string(a) + " has " +
                                  std::to_string(layers_[a].n_nodes()) + " nodes, expected " +
                                  std::to_string(n_nodes_));
    }
  }

  const std::size_t L = layers_.size();
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  keys.reserve(inter_edges_.size());
  for (const InterEdge& e : inter_edges_) {
    if (e.src.node >= n_nodes_ || e.dst.node >= n_nodes_ || e.src.layer >= L || e.dst.layer >= L) {
      throw std::out_of_range("inter-layer edge endpoint outside the network");
    }
    if (e.src.layer == e.dst.layer) {
      throw std::invalid_argument("inter-layer edge must connect distinct layers (layer " +
                                  std::to_string(e.src.layer) + ")");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("inter-layer edge weights must be finite and strictly positive");
    }
    std::size_t a = flatten(e.src, n_nodes_);
    std::size_t b = flatten(e.dst, n_nodes_);
    keys.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("duplicate inter-layer edge");
  }

  if (features_) {
    if (features_->rows != n_replicas()) {
      throw std::invalid_argument("feature matrix must have one row per replica (" +
                                  std::to_string(n_replicas()) + ")");
    }
    if (features_->cols == 0 || features_->values.size() != features_->rows * features_->cols) {
      throw std::invalid_argument("feature matrix is malformed");
    }
  }
}

const LayerGraph& MultilayerNetwork::layer(LayerId alpha) const {
  if (alpha >= layers_.size()) throw std::out_of_range("layer id out of range");
  return layers_[alpha];
}

std::size_t MultilayerNetwork::n_intra_edges() const {
  std::size_t total = 0;
  for (const LayerGraph& g : layers_) total += g.n_edges();
  return total;
}

bool MultilayerNetwork::all_undirected() const {
  return std::none_of(layers_.begin(), layers_.end(), [](const LayerGraph& g) { return g.directed(); });
}

MultilayerNetwork MultilayerNetwork::with_inter_edges(std::vector<InterEdge> inter_edges) const {
  return MultilayerNetwork(n_nodes_, layers_, std::move(inter_edges), features_);
}

MultilayerNetwork MultilayerNetwork::with_layer(LayerId alpha, LayerGraph graph) const {
  std::vector<LayerGraph> layers = layers_;
  if (alpha >= layers.size()) throw std::out_of_range("layer id out of range");
  layers[alpha] = std::move(graph);
  return MultilayerNetwork(n_nodes_, std::move(layers), inter_edges_, features_);
}

MultilayerNetwork MultilayerNetwork::with_features(std::optional<FeatureMatrix> features) const {
  return MultilayerNetwork(n_nodes_, layers_, inter_edges_, std::move(features));
}

MultilayerNetwork build_multiplex_clique(const MultilayerNetwork& net, double weight) {
  if (!net.inter_edges().empty()) {
    throw std::invalid_argument("build_multiplex_clique: network already has inter-layer edges");
  }
  if (!(weight > 0.0)) throw std::invalid_argument("coupling weight must be strictly positive");
  const auto N = static_cast<NodeId>(net.n_nodes());
  const auto L = static_cast<LayerId>(net.n_layers());
  std::vector<InterEdge> edges;
  edges.reserve(static_cast<std::size_t>(N) * L * (L - 1) / 2);
  for (NodeId n = 0; n < N; ++n) {
    for (LayerId a = 0; a < L; ++a) {
      for (LayerId b = a + 1; b < L; ++b) {
        edges.push_back(InterEdge{ReplicaId{n, a}, ReplicaId{n, b}, weight});
      }
    }
  }
  return net.with_inter_edges(std::move(edges));
}

MultilayerNetwork apply_interlayer(const MultilayerNetwork& net, const InterlayerPolicy& policy) {
  if (const auto* clique = std::get_if<MultiplexClique>(&policy)) {
    return build_multiplex_clique(net, clique->weight);
  }
  const auto& explicit_edges = std::get<ExplicitInterlayer>(policy);
  if (!net.inter_edges().empty()) {
    throw std::invalid_argument("apply_interlayer: network already has inter-layer edges");
  }
  return net.with_inter_edges(explicit_edges.edges);
}

ExplodedNetwork explode(const MultilayerNetwork& net) {
  const std::size_t N = net.n_nodes();
  const std::size_t NL = net.n_replicas();
  ExplodedNetwork out;
  out.n_nodes = N;
  out.n_layers = net.n_layers();
  out.intra.reserve(net.n_layers());
  for (std::size_t a = 0; a < net.n_layers(); ++a) {
    const LayerGraph& g = net.layer(static_cast<LayerId>(a));
    const auto offset = static_cast<NodeId>(a * N);
    std::vector<Edge> edges;
    edges.reserve(g.n_edges());
    for (const Edge& e : g.edges()) edges.push_back(Edge{e.src + offset, e.dst + offset, e.weight});
    out.intra.emplace_back(NL, g.directed(), std::move(edges));
  }
  std::vector<Edge> inter;
  inter.reserve(net.inter_edges().size());
  for (const InterEdge& e : net.inter_edges()) {
    inter.push_back(Edge{static_cast<NodeId>(flatten(e.src, N)), static_cast<NodeId>(flatten(e.dst, N)),
                         e.weight});
  }
  out.inter = LayerGraph(NL, false, std::move(inter));
  return out;
}

}  // namespace mgnn
