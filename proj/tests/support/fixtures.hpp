#pragma once

// Small random instances and naive reference evaluations for the nn tests.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"
#include "mgnn/tensor/tensor.hpp"
#include "support/oracles.hpp"

namespace mgnn::testing {

inline MultilayerNetwork random_multiplex(std::size_t n, std::size_t layers, double p, std::uint64_t seed,
                                          double coupling = 1.0) {
  std::mt19937_64 rng(seed);
  std::vector<LayerGraph> ls;
  for (std::size_t a = 0; a < layers; ++a) ls.push_back(random_layer(n, p, rng));
  MultilayerNetwork net(n, std::move(ls));
  return layers > 1 ? build_multiplex_clique(net, coupling) : net;
}

/// Entries of magnitude in [0.1, 1] with random sign.
inline std::vector<double> random_values(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::bernoulli_distribution sign(0.5);
  std::vector<double> v(count);
  for (double& x : v) x = sign(rng) ? mag(rng) : -mag(rng);
  return v;
}

inline Tensor random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, bool requires_grad = false) {
  return Tensor::from_values({rows, cols}, random_values(rows * cols, seed), requires_grad);
}

/// GAT evaluated with plain loops over every edge, no tensor ops.
/// `in_nbrs[i]` lists the sources of messages into i, excluding i itself.
inline std::vector<double> naive_gat(const std::vector<double>& x, std::size_t n, std::size_t f_in,
                                     const std::vector<double>& w, const std::vector<double>& att, std::size_t heads,
                                     std::size_t f, double slope, const std::vector<std::vector<std::size_t>>& in_nbrs) {
  const std::size_t hf = heads * f;
  std::vector<double> z(n * hf, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < hf; ++c)
      for (std::size_t k = 0; k < f_in; ++k) z[i * hf + c] += x[i * f_in + k] * w[k * hf + c];

  std::vector<double> out(n * hf, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> nb = in_nbrs[i];
    nb.push_back(i);
    for (std::size_t h = 0; h < heads; ++h) {
      std::vector<double> e;
      for (std::size_t j : nb) {
        double s = 0.0;
        for (std::size_t k = 0; k < f; ++k) {
          s += att[h * 2 * f + k] * z[i * hf + h * f + k];
          s += att[h * 2 * f + f + k] * z[j * hf + h * f + k];
        }
        e.push_back(s > 0 ? s : slope * s);
      }
      double m = -std::numeric_limits<double>::infinity();
      for (double v : e) m = std::max(m, v);
      double denom = 0.0;
      for (double v : e) denom += std::exp(v - m);
      for (std::size_t t = 0; t < nb.size(); ++t) {
        const double a = std::exp(e[t] - m) / denom;
        for (std::size_t k = 0; k < f; ++k) out[i * hf + h * f + k] += a * z[nb[t] * hf + h * f + k];
      }
    }
  }
  return out;
}

/// Hop distances from `source` in the undirected supra graph (intra and
/// inter edges), over flattened replica ids.
inline std::vector<std::size_t> supra_hops(const MultilayerNetwork& net, std::size_t source) {
  const std::size_t N = net.n_nodes();
  const std::size_t D = net.n_replicas();
  std::vector<std::vector<std::size_t>> adj(D);
  for (std::size_t a = 0; a < net.n_layers(); ++a) {
    for (const Edge& e : net.layer(static_cast<LayerId>(a)).edges()) {
      adj[a * N + e.src].push_back(a * N + e.dst);
      adj[a * N + e.dst].push_back(a * N + e.src);
    }
  }
  for (const InterEdge& e : net.inter_edges()) {
    const std::size_t u = e.src.layer * N + e.src.node;
    const std::size_t v = e.dst.layer * N + e.dst.node;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> dist(D, std::numeric_limits<std::size_t>::max());
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

/// Relabels node i as perm[i] in every layer and in the inter-layer edges.
inline MultilayerNetwork permute_nodes(const MultilayerNetwork& net, const std::vector<NodeId>& perm) {
  std::vector<LayerGraph> ls;
  for (const LayerGraph& g : net.layers()) {
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.push_back(Edge{perm[e.src], perm[e.dst], e.weight});
    ls.emplace_back(g.n_nodes(), g.directed(), std::move(es));
  }
  std::vector<InterEdge> inter;
  for (const InterEdge& e : net.inter_edges()) {
    inter.push_back(InterEdge{{perm[e.src.node], e.src.layer}, {perm[e.dst.node], e.dst.layer}, e.weight});
  }
  return MultilayerNetwork(net.n_nodes(), std::move(ls), std::move(inter));
}

inline std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<NodeId> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<NodeId>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(p[i - 1], p[pick(rng)]);
  }
  return p;
}

/// Three-layer multiplex in the shape of the explode illustration: node 1
/// in layer 1 touches a path of intra edges and the clique coupling.
inline MultilayerNetwork illustration_multiplex() {
  const std::size_t N = 7;
  std::vector<LayerGraph> ls;
  ls.emplace_back(N, false, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  ls.emplace_back(N, false, std::vector<Edge>{{1, 3}, {3, 5}, {0, 6}});
  ls.emplace_back(N, false, std::vector<Edge>{{2, 4}, {4, 6}, {0, 1}});
  return build_multiplex_clique(MultilayerNetwork(N, std::move(ls)), 1.0);
}

}  // namespace mgnn::testing
