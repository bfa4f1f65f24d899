#include "mgnn/mlgraph/layer_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace mgnn {

LayerGraph::LayerGraph(std::size_t n_nodes, bool directed, std::vector<Edge> edges)
    : n_nodes_(n_nodes), directed_(directed), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.src >= n_nodes_ || e.dst >= n_nodes_) {
      throw std::out_of_range("edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                              ") outside node range " + std::to_string(n_nodes_));
    }
    if (e.src == e.dst) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.src) + " is not supported");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("edge weights must be finite and strictly positive");
    }
  }

  std::vector<std::pair<NodeId, NodeId>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (directed_) {
      keys.emplace_back(e.src, e.dst);
    } else {
      keys.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
    }
  }
  std::sort(keys.begin(), keys.end());
  auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  }

  // In-adjacency in CSR form.
  std::vector<std::size_t> counts(n_nodes_ + 1, 0);
  out_degree_.assign(n_nodes_, 0);
  for (const Edge& e : edges_) {
    ++counts[e.dst + 1];
    ++out_degree_[e.src];
    if (!directed_) {
      ++counts[e.src + 1];
      ++out_degree_[e.dst];
    }
  }
  for (std::size_t i = 1; i <= n_nodes_; ++i) counts[i] += counts[i - 1];
  in_offsets_ = counts;
  in_index_.resize(in_offsets_.back());
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    in_index_[cursor[e.dst]++] = Neighbor{e.src, e.weight};
    if (!directed_) in_index_[cursor[e.src]++] = Neighbor{e.dst, e.weight};
  }
  for (std::size_t v = 0; v < n_nodes_; ++v) {
    std::sort(in_index_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[v]),
              in_index_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::span<const LayerGraph::Neighbor> LayerGraph::in_neighbors(NodeId v) const {
  if (v >= n_nodes_) throw std::out_of_range("in_neighbors: node out of range");
  return std::span<const Neighbor>(in_index_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

std::size_t LayerGraph::out_degree(NodeId v) const {
  if (v >= n_nodes_) throw std::out_of_range("out_degree: node out of range");
  return out_degree_[v];
}

double LayerGraph::in_strength(NodeId v) const {
  double s = 0.0;
  for (const Neighbor& nb : in_neighbors(v)) s += nb.weight;
  return s;
}

bool LayerGraph::has_edge(NodeId u, NodeId v) const {
  if (u >= n_nodes_ || v >= n_nodes_) return false;
  auto nbrs = in_neighbors(v);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u,
                             [](const Neighbor& nb, NodeId id) { return nb.node < id; });
  return it != nbrs.end() && it->node == u;
}

}  // namespace mgnn
