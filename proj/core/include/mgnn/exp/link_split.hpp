#pragma once

#include <cstdint>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"

namespace mgnn {

struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/*
  Held-out links of one target layer. Test positives are removed from the
  target layer of `train_network`; every other layer and the inter-layer
  edges are untouched. Negatives are non-edges of the target layer, sampled
  uniformly without replacement, as many as the matching positives. For
  undirected layers pairs are stored with u < v.
*/
struct LinkSplit {
  LayerId target = 0;
  std::vector<NodePair> train_pos;
  std::vector<NodePair> test_pos;
  std::vector<NodePair> train_neg;
  std::vector<NodePair> test_neg;
  MultilayerNetwork train_network;
};

/// test positives = max(1, floor(fraction * edges)). Throws if the layer
/// has fewer than 5 edges or too few non-edges for the negatives.
LinkSplit make_link_split(const MultilayerNetwork& net, LayerId target, double fraction, std::uint64_t seed);

}  // namespace mgnn
