#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"
#include "mgnn/tensor/ops.hpp"

namespace mgnn {

/*
  Message list consumed by attention layers: one entry per (src -> dst)
  message, sorted by dst then src. Undirected edges contribute both
  directions, directed edges u -> v only the message u -> v (v attends over
  its in-neighbours). Every node also messages itself.
*/
struct MessageGraph {
  std::size_t n_nodes = 0;
  IndexArray src;
  IndexArray dst;

  std::size_t n_messages() const { return src ? src->size() : 0; }
};

/// Union of `graphs`, all defined over the same n nodes.
MessageGraph message_graph(std::size_t n, std::span<const LayerGraph> graphs, bool self_loops = true);
MessageGraph message_graph(const LayerGraph& g, bool self_loops = true);

/// Exploded multilayer network in message form, over the N*L replica ids.
struct SupraGraphs {
  std::size_t n_nodes = 0;
  std::size_t n_layers = 0;
  MessageGraph intra;
  /// Layer alpha alone, over local ids 0..N-1 (per-layer intra GATs).
  std::vector<MessageGraph> per_layer;
  MessageGraph inter;

  std::size_t n_replicas() const { return n_nodes * n_layers; }
};

SupraGraphs supra_graphs(const MultilayerNetwork& net);

/// Counts messages processed by attention layers.
struct ForwardStats {
  std::uint64_t messages = 0;
};

}  // namespace mgnn
