#include "mgnn/nn/message_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mgnn {

MessageGraph message_graph(std::size_t n, std::span<const LayerGraph> graphs, bool self_loops) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> msgs;  // (dst, src)
  std::size_t total = self_loops ? n : 0;
  for (const LayerGraph& g : graphs) total += g.directed() ? g.n_edges() : 2 * g.n_edges();
  msgs.reserve(total);
  for (const LayerGraph& g : graphs) {
    if (g.n_nodes() != n) throw std::invalid_argument("message_graph: graphs must share the node range");
    for (const Edge& e : g.edges()) {
      msgs.emplace_back(e.dst, e.src);
      if (!g.directed()) msgs.emplace_back(e.src, e.dst);
    }
  }
  if (self_loops) {
    for (std::uint32_t v = 0; v < n; ++v) msgs.emplace_back(v, v);
  }
  std::sort(msgs.begin(), msgs.end());
  std::vector<std::uint32_t> src(msgs.size());
  std::vector<std::uint32_t> dst(msgs.size());
  for (std::size_t k = 0; k < msgs.size(); ++k) {
    dst[k] = msgs[k].first;
    src[k] = msgs[k].second;
  }
  return MessageGraph{n, make_index(std::move(src)), make_index(std::move(dst))};
}

MessageGraph message_graph(const LayerGraph& g, bool self_loops) {
  return message_graph(g.n_nodes(), std::span<const LayerGraph>(&g, 1), self_loops);
}

SupraGraphs supra_graphs(const MultilayerNetwork& net) {
  const ExplodedNetwork ex = explode(net);
  SupraGraphs out;
  out.n_nodes = net.n_nodes();
  out.n_layers = net.n_layers();
  out.intra = message_graph(net.n_replicas(), ex.intra);
  out.inter = message_graph(ex.inter);
  for (const LayerGraph& g : net.layers()) out.per_layer.push_back(message_graph(g));
  return out;
}

}  // namespace mgnn
