#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mgnn/mlgraph/ids.hpp"

namespace mgnn {

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/*
  Single graph over a fixed node range. Immutable once built.

  Undirected graphs store each edge once (in the orientation it was given)
  but answer neighbourhood queries symmetrically. The in-adjacency index is
  sorted by neighbour id, so membership tests are logarithmic.
*/
class LayerGraph {
 public:
  struct Neighbor {
    NodeId node;
    double weight;
  };

  LayerGraph() = default;

  /// Validates ids, weights, self-loops and duplicate pairs; throws
  /// std::invalid_argument / std::out_of_range on violation.
  LayerGraph(std::size_t n_nodes, bool directed, std::vector<Edge> edges);

  std::size_t n_nodes() const { return n_nodes_; }
  bool directed() const { return directed_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t n_edges() const { return edges_.size(); }

  /// Nodes u with an edge u -> v (both endpoints for undirected graphs).
  std::span<const Neighbor> in_neighbors(NodeId v) const;
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }
  std::size_t out_degree(NodeId v) const;
  double in_strength(NodeId v) const;

  /// True if u -> v is an edge; symmetric for undirected graphs.
  bool has_edge(NodeId u, NodeId v) const;

 private:
  std::size_t n_nodes_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Neighbor> in_index_;
  std::vector<std::size_t> out_degree_;
};

}  // namespace mgnn
