#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"
#include "mgnn/tensor/ops.hpp"

namespace mgnn {

std::uint64_t splitmix64(std::uint64_t x);
/// Child seed for a position in a generation scheme, e.g. (combo, split,
/// replicate). Independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Each unordered pair (or ordered pair when directed) present with
/// probability p, decided by uniform01(rng) < p in lexicographic order.
LayerGraph er_layer(std::size_t n, double p, bool directed, Rng& rng);

struct ERMultiplexSpec {
  std::size_t n_nodes = 50;
  std::size_t n_layers = 2;
  /// One probability per layer, ascending.
  std::vector<double> p;
  double coupling = 1.0;
  std::uint64_t seed = 0;

  /// Strict form used for datasets: probabilities in (0, 1).
  void validate() const;
};

/// Undirected ER layers with multiplex-clique coupling. Accepts the closed
/// interval [0, 1] so the degenerate boundaries can be exercised.
MultilayerNetwork er_multiplex_generate(const ERMultiplexSpec& spec);

struct LabeledNetwork {
  MultilayerNetwork network;
  std::vector<std::uint32_t> labels;
};

/*
  Stochastic block multiplex: node blocks are contiguous id ranges, every
  layer is sampled independently with p_in inside a block and p_out across.
  Labels are block ids.
*/
struct PlantedBlocksSpec {
  std::vector<std::size_t> block_sizes{180, 120};
  std::size_t n_layers = 2;
  double p_in = 0.9;
  double p_out = 0.01;
  double coupling = 1.0;
  std::uint64_t seed = 0;
};

LabeledNetwork planted_blocks(const PlantedBlocksSpec& spec);

/*
  Disconnected communities, one label each: community c is ER with
  density[c] (1.0 gives a clique) and has no edges to other communities.
  With identical_layers every layer is the same graph.
*/
struct CommunitySpec {
  std::vector<std::size_t> sizes{24, 16};
  std::vector<double> density{1.0, 1.0};
  std::size_t n_layers = 2;
  bool identical_layers = true;
  double coupling = 1.0;
  std::uint64_t seed = 0;
};

LabeledNetwork separable_communities(const CommunitySpec& spec);

/// Stand-in with the malaria network's shape: 307 nodes, 9 undirected
/// layers, 6 unbalanced classes with class-dependent layer densities.
LabeledNetwork malaria_like(std::uint64_t seed);

/// Stand-in with the FF-TW-YT shape scaled by `scale`: 6.4K nodes, layers
/// of 32.0K directed, 42.3K directed and 0.6K undirected edges, with shared
/// community structure so links are predictable.
MultilayerNetwork social_multiplex_like(double scale, std::uint64_t seed);

}  // namespace mgnn
