#include "mgnn/exp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace mgnn {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(base);
  for (std::uint64_t k : path) s = splitmix64(s ^ splitmix64(k + 0x632BE59BD9B4E019ull));
  return s;
}

LayerGraph er_layer(std::size_t n, double p, bool directed, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("er_layer: p must lie in [0, 1]");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = directed ? 0 : i + 1; j < n; ++j) {
      if (i != j && uniform01(rng) < p) edges.push_back(Edge{i, j, 1.0});
    }
  }
  return LayerGraph(n, directed, std::move(edges));
}

void ERMultiplexSpec::validate() const {
  if (n_nodes == 0 || n_layers == 0) throw std::invalid_argument("ERMultiplexSpec: empty network");
  if (p.size() != n_layers) throw std::invalid_argument("ERMultiplexSpec: one probability per layer required");
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!(p[a] > 0.0 && p[a] < 1.0)) throw std::invalid_argument("ERMultiplexSpec: probabilities must lie in (0, 1)");
    if (a > 0 && p[a] < p[a - 1]) throw std::invalid_argument("ERMultiplexSpec: probabilities must be ascending");
  }
  if (!(coupling > 0.0)) throw std::invalid_argument("ERMultiplexSpec: coupling must be positive");
}

MultilayerNetwork er_multiplex_generate(const ERMultiplexSpec& spec) {
  if (spec.p.size() != spec.n_layers) throw std::invalid_argument("er_multiplex_generate: one p per layer");
  for (std::size_t a = 1; a < spec.p.size(); ++a) {
    if (spec.p[a] < spec.p[a - 1]) throw std::invalid_argument("er_multiplex_generate: p must be ascending");
  }
  Rng rng(spec.seed);
  std::vector<LayerGraph> layers;
  for (double p : spec.p) layers.push_back(er_layer(spec.n_nodes, p, false, rng));
  MultilayerNetwork net(spec.n_nodes, std::move(layers));
  return spec.n_layers > 1 ? build_multiplex_clique(net, spec.coupling) : net;
}

namespace {

std::vector<std::uint32_t> block_of(const std::vector<std::size_t>& sizes) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b < sizes.size(); ++b) out.insert(out.end(), sizes[b], b);
  return out;
}

MultilayerNetwork couple(std::size_t n, std::vector<LayerGraph> layers, double coupling) {
  const bool multi = layers.size() > 1;
  MultilayerNetwork net(n, std::move(layers));
  return multi ? build_multiplex_clique(net, coupling) : net;
}

}  // namespace

LabeledNetwork planted_blocks(const PlantedBlocksSpec& spec) {
  const auto block = block_of(spec.block_sizes);
  const std::size_t n = block.size();
  if (n == 0) throw std::invalid_argument("planted_blocks: no nodes");
  Rng rng(spec.seed);
  std::vector<LayerGraph> layers;
  for (std::size_t a = 0; a < spec.n_layers; ++a) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j)
        if (uniform01(rng) < (block[i] == block[j] ? spec.p_in : spec.p_out)) edges.push_back(Edge{i, j, 1.0});
    layers.emplace_back(n, false, std::move(edges));
  }
  return {couple(n, std::move(layers), spec.coupling), block};
}

LabeledNetwork separable_communities(const CommunitySpec& spec) {
  if (spec.sizes.size() != spec.density.size()) {
    throw std::invalid_argument("separable_communities: one density per community");
  }
  const auto block = block_of(spec.sizes);
  const std::size_t n = block.size();
  Rng rng(spec.seed);
  auto sample = [&] {
    std::vector<Edge> edges;
    NodeId offset = 0;
    for (std::size_t c = 0; c < spec.sizes.size(); ++c) {
      for (NodeId i = 0; i < spec.sizes[c]; ++i)
        for (NodeId j = i + 1; j < spec.sizes[c]; ++j)
          if (uniform01(rng) < spec.density[c]) edges.push_back(Edge{offset + i, offset + j, 1.0});
      offset += static_cast<NodeId>(spec.sizes[c]);
    }
    return LayerGraph(n, false, std::move(edges));
  };
  std::vector<LayerGraph> layers;
  for (std::size_t a = 0; a < spec.n_layers; ++a) {
    layers.push_back(spec.identical_layers && a > 0 ? layers.front() : sample());
  }
  return {couple(n, std::move(layers), spec.coupling), block};
}

LabeledNetwork malaria_like(std::uint64_t seed) {
  const std::vector<std::size_t> sizes{110, 75, 50, 35, 22, 15};
  const auto cls = block_of(sizes);
  const std::size_t n = cls.size();
  Rng rng(seed);
  std::vector<LayerGraph> layers;
  for (std::size_t a = 0; a < 9; ++a) {
    std::vector<double> p_in(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) p_in[c] = 0.04 + 0.03 * static_cast<double>((c + a) % 4);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j)
        if (uniform01(rng) < (cls[i] == cls[j] ? p_in[cls[i]] : 0.008)) edges.push_back(Edge{i, j, 1.0});
    layers.emplace_back(n, false, std::move(edges));
  }
  return {couple(n, std::move(layers), 1.0), cls};
}

MultilayerNetwork social_multiplex_like(double scale, std::uint64_t seed) {
  if (!(scale > 0.0 && scale <= 1.0)) throw std::invalid_argument("social_multiplex_like: scale must lie in (0, 1]");
  const auto n = static_cast<std::size_t>(std::llround(6400 * scale));
  const std::size_t groups = 8;
  const struct {
    double edges;
    bool directed;
  } shape[] = {{32000, true}, {42300, true}, {600, false}};
  Rng rng(seed);
  std::vector<std::uint32_t> group(n);
  for (auto& g : group) g = static_cast<std::uint32_t>(uniform_index(rng, groups));
  std::vector<std::vector<NodeId>> members(groups);
  for (NodeId i = 0; i < n; ++i) members[group[i]].push_back(i);

  std::vector<LayerGraph> layers;
  for (const auto& s : shape) {
    const auto m = static_cast<std::size_t>(std::llround(s.edges * scale));
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<Edge> edges;
    while (edges.size() < m) {
      const auto u = static_cast<NodeId>(uniform_index(rng, n));
      NodeId v;
      if (uniform01(rng) < 0.9) {
        const auto& pool = members[group[u]];
        v = pool[uniform_index(rng, pool.size())];
      } else {
        v = static_cast<NodeId>(uniform_index(rng, n));
      }
      if (u == v) continue;
      auto key = s.directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
      if (seen.insert(key).second) edges.push_back(Edge{u, v, 1.0});
    }
    layers.emplace_back(n, s.directed, std::move(edges));
  }
  return build_multiplex_clique(MultilayerNetwork(n, std::move(layers)), 1.0);
}

}  // namespace mgnn
