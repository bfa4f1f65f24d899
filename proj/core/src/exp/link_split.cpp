#include "mgnn/exp/link_split.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "mgnn/tensor/ops.hpp"

namespace mgnn {

LinkSplit make_link_split(const MultilayerNetwork& net, LayerId target, double fraction, std::uint64_t seed) {
  if (target >= net.n_layers()) throw std::out_of_range("make_link_split: target layer out of range");
  if (!(fraction > 0.0 && fraction < 1.0)) throw std::invalid_argument("make_link_split: fraction must lie in (0, 1)");
  const LayerGraph& g = net.layer(target);
  const std::size_t m = g.n_edges();
  if (m < 5) throw std::invalid_argument("make_link_split: target layer has only " + std::to_string(m) + " edges");
  const std::size_t n = g.n_nodes();
  const bool directed = g.directed();
  const std::size_t pairs = directed ? n * (n - 1) : n * (n - 1) / 2;
  if (pairs - m < m) {
    throw std::invalid_argument("make_link_split: " + std::to_string(pairs - m) + " non-edges cannot supply " +
                                std::to_string(m) + " negatives");
  }

  Rng rng(seed);
  auto canon = [directed](NodeId u, NodeId v) {
    return directed || u < v ? NodePair{u, v} : NodePair{v, u};
  };
  std::vector<NodePair> pos;
  pos.reserve(m);
  for (const Edge& e : g.edges()) pos.push_back(canon(e.src, e.dst));
  shuffle_in_place(pos, rng);
  const std::size_t n_test = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(fraction * static_cast<double>(m))));

  std::vector<NodePair> test_pos(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(n_test));
  std::vector<NodePair> train_pos(pos.begin() + static_cast<std::ptrdiff_t>(n_test), pos.end());

  std::vector<NodePair> neg;
  neg.reserve(m);
  if (2 * m > pairs - m) {
    // Dense layer: enumerate the non-edges and take a random subset.
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = directed ? 0 : u + 1; v < n; ++v)
        if (u != v && !g.has_edge(u, v)) neg.push_back(NodePair{u, v});
    shuffle_in_place(neg, rng);
    neg.resize(m);
  } else {
    std::set<NodePair> seen;
    while (neg.size() < m) {
      const auto u = static_cast<NodeId>(uniform_index(rng, n));
      const auto v = static_cast<NodeId>(uniform_index(rng, n));
      if (u == v || g.has_edge(u, v)) continue;
      const NodePair p = canon(u, v);
      if (seen.insert(p).second) neg.push_back(p);
    }
  }
  std::vector<NodePair> test_neg(neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(n_test));
  std::vector<NodePair> train_neg(neg.begin() + static_cast<std::ptrdiff_t>(n_test), neg.end());

  std::set<NodePair> removed(test_pos.begin(), test_pos.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!removed.count(canon(e.src, e.dst))) kept.push_back(e);
  }
  return LinkSplit{target,
                   std::move(train_pos),
                   std::move(test_pos),
                   std::move(train_neg),
                   std::move(test_neg),
                   net.with_layer(target, LayerGraph(n, directed, std::move(kept)))};
}

}  // namespace mgnn
